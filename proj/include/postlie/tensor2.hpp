#pragma once

#include "postlie/error.hpp"
#include "postlie/matrix.hpp"

namespace postlie {

/// r = sum_ij r(i, j) e_i (x) e_j.
class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(std::size_t n) : m_(n, n) {}
  explicit Tensor2(Matrix m) : m_(std::move(m)) {
    if (!m_.square()) throw DimensionError("2-tensor coefficients must be square");
  }

  std::size_t dim() const noexcept { return m_.rows(); }
  Scalar& operator()(std::size_t i, std::size_t j) { return m_(i, j); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const noexcept { return m_; }

  /// The flip tau(a (x) b) = b (x) a.
  Tensor2 tau() const { return Tensor2(m_.transpose()); }
  bool is_antisymmetric() const { return (m_ + m_.transpose()).is_zero(); }
  bool is_zero() const { return m_.is_zero(); }

  friend Tensor2 operator+(const Tensor2& a, const Tensor2& b) { return Tensor2(a.m_ + b.m_); }
  friend Tensor2 operator-(const Tensor2& a, const Tensor2& b) { return Tensor2(a.m_ - b.m_); }
  friend Tensor2 operator-(const Tensor2& a) { return Tensor2(-a.m_); }
  friend Tensor2 operator*(const Scalar& s, const Tensor2& a) { return Tensor2(s * a.m_); }
  friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

}  // namespace postlie
