#include "postlie/algebra.hpp"

#include <algorithm>

#include "postlie/error.hpp"

namespace postlie {

std::string field_name(Field f) { return f == Field::Q ? "Q" : "Q(i)"; }

Field parse_field(std::string_view text) {
  if (text == "Q") return Field::Q;
  if (text == "Q(i)") return Field::QI;
  throw ParseError("unknown field '" + std::string(text) + "'");
}

namespace ops {

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> names = {circ, bracket, rtri, ltri, bullet, star, se, ne, sw, nw, dot};
  return names;
}

bool known(std::string_view name) {
  const auto& names = catalog();
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace ops

Vector Tensor3::apply(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionError("operand length does not match table dimension");
  Vector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar& c = (*this)(i, j, k);
        if (!c.is_zero()) out[k] += w * c;
      }
    }
  }
  return out;
}

Vector Tensor3::product(std::size_t i, std::size_t j) const {
  Vector out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = (*this)(i, j, k);
  return out;
}

Matrix Tensor3::left(const Vector& x) const {
  Matrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Vector v = apply(x, basis_vector(n_, j));
    for (std::size_t k = 0; k < n_; ++k) m(k, j) = v[k];
  }
  return m;
}

Matrix Tensor3::right(const Vector& y) const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Vector v = apply(basis_vector(n_, i), y);
    for (std::size_t k = 0; k < n_; ++k) m(k, i) = v[k];
  }
  return m;
}

Tensor3 Tensor3::swapped() const {
  Tensor3 t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) t(i, j, k) = (*this)(j, i, k);
  return t;
}

bool Tensor3::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t Tensor3::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](const Scalar& s) { return !s.is_zero(); }));
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  if (n_ != other.n_) throw DimensionError("table dimensions differ");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += other.c_[k];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
  if (n_ != other.n_) throw DimensionError("table dimensions differ");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= other.c_[k];
  return *this;
}

Tensor3 operator-(const Tensor3& a) {
  Tensor3 t(a.n_);
  for (std::size_t k = 0; k < a.c_.size(); ++k) t.c_[k] = -a.c_[k];
  return t;
}

Tensor3 operator*(const Scalar& s, const Tensor3& a) {
  Tensor3 t(a.n_);
  for (std::size_t k = 0; k < a.c_.size(); ++k) t.c_[k] = s * a.c_[k];
  return t;
}

AlgebraSpec::AlgebraSpec(std::size_t n, Field f) : field(f), basis(default_basis(n)) {}

const Tensor3& AlgebraSpec::op(const std::string& name) const {
  auto it = ops.find(name);
  if (it == ops.end()) throw UnknownOperation(name);
  return it->second;
}

void AlgebraSpec::set(const std::string& name, Tensor3 t) {
  if (t.dim() != dim()) throw DimensionError("table for '" + name + "' has the wrong dimension");
  ops[name] = std::move(t);
}

std::vector<std::string> default_basis(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

std::vector<Vector> basis_vectors(std::size_t n) {
  std::vector<Vector> e;
  e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) e.push_back(basis_vector(n, i));
  return e;
}

Vector apply(const AlgebraSpec& alg, const std::string& op, const Vector& x, const Vector& y) {
  return alg.op(op).apply(x, y);
}

}  // namespace postlie
