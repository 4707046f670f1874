#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "postlie/matrix.hpp"

namespace postlie {

enum class Field { Q, QI };

std::string field_name(Field f);
Field parse_field(std::string_view text);

/// Operation names understood by checkers and constructions.
namespace ops {
inline constexpr const char* circ = "circ";
inline constexpr const char* bracket = "bracket";
inline constexpr const char* rtri = "rtri";
inline constexpr const char* ltri = "ltri";
inline constexpr const char* bullet = "bullet";
inline constexpr const char* star = "star";
inline constexpr const char* se = "se";
inline constexpr const char* ne = "ne";
inline constexpr const char* sw = "sw";
inline constexpr const char* nw = "nw";
inline constexpr const char* dot = "dot";

bool known(std::string_view name);
const std::vector<std::string>& catalog();
}  // namespace ops

/// Structure constants of a bilinear product: e_i * e_j = sum_k c(i,j,k) e_k.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n) : n_(n), c_(n * n * n) {}

  std::size_t dim() const noexcept { return n_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

  /// Bilinear extension.
  Vector apply(const Vector& x, const Vector& y) const;
  /// Product of two basis elements.
  Vector product(std::size_t i, std::size_t j) const;

  /// Matrix of y -> x * y.
  Matrix left(const Vector& x) const;
  /// Matrix of x -> x * y.
  Matrix right(const Vector& y) const;

  /// Table of (x, y) -> y * x.
  Tensor3 swapped() const;
  bool is_zero() const;
  std::size_t nonzero_count() const;

  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator-=(const Tensor3& other);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator-(const Tensor3& a);
  friend Tensor3 operator*(const Scalar& s, const Tensor3& a);
  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> c_;
};

/// Callable view of a table.
class Product {
 public:
  explicit Product(const Tensor3& t) : t_(&t) {}
  explicit Product(Tensor3&&) = delete;
  Vector operator()(const Vector& x, const Vector& y) const { return t_->apply(x, y); }
  const Tensor3& table() const noexcept { return *t_; }

 private:
  const Tensor3* t_;
};

std::vector<Vector> basis_vectors(std::size_t n);

/// Table whose (i, j) product is f(e_i, e_j).
template <class F>
Tensor3 tabulate(std::size_t n, F&& f) {
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = f(basis_vector(n, i), basis_vector(n, j));
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = v[k];
    }
  return t;
}

/// A finite-dimensional vector space with named bilinear products.
struct AlgebraSpec {
  Field field = Field::QI;
  std::vector<std::string> basis;
  std::map<std::string, Tensor3> ops;

  AlgebraSpec() = default;
  explicit AlgebraSpec(std::size_t n, Field f = Field::QI);

  std::size_t dim() const noexcept { return basis.size(); }
  bool has(const std::string& name) const { return ops.count(name) != 0; }

  /// Throws UnknownOperation.
  const Tensor3& op(const std::string& name) const;
  /// Inserts or replaces; throws DimensionError on a shape mismatch.
  void set(const std::string& name, Tensor3 t);

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.field == b.field && a.basis == b.basis && a.ops == b.ops;
  }
};

/// e1 .. en
std::vector<std::string> default_basis(std::size_t n, std::string_view prefix = "e");

/// Evaluates op(x, y). Throws UnknownOperation or DimensionError.
Vector apply(const AlgebraSpec& alg, const std::string& op, const Vector& x, const Vector& y);

}  // namespace postlie
