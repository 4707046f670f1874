#include "postlie/scalar.hpp"

#include <cctype>
#include <ostream>

#include "postlie/error.hpp"

namespace postlie {

namespace {

// Parses `p` or `p/q` (optional leading '-') occupying text[begin, end).
mpq_class parse_rational(std::string_view text, std::size_t begin, std::size_t end) {
  std::size_t pos = begin;
  bool negative = false;
  if (pos < end && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < end && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == start) throw ParseError("expected digit in scalar '" + std::string(text) + "'", 0, p + 1);
    return std::string(text.substr(start, p - start));
  };
  std::string num = digits(pos);
  std::string den = "1";
  if (pos < end && text[pos] == '/') {
    ++pos;
    den = digits(pos);
  }
  if (pos != end) throw ParseError("unexpected character in scalar '" + std::string(text) + "'", 0, pos + 1);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in scalar '" + std::string(text) + "'", 0, begin + 1);
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

// Coefficient of i; a bare sign stands for +-1.
mpq_class parse_imag(std::string_view text, std::size_t begin, std::size_t end) {
  if (end == begin) return 1;
  if (end == begin + 1 && text[begin] == '-') return -1;
  if (end == begin + 1 && text[begin] == '+') return 1;
  if (text[begin] == '+') ++begin;
  return parse_rational(text, begin, end);
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DivisionByZero();
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar", 0, 1);
  if (text.back() != 'i') return Scalar(parse_rational(text, 0, text.size()), 0);

  std::size_t body = text.size() - 1;
  // Split at the last sign that is not at position 0 and not right after '/'.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = body; p-- > 1;) {
    if ((text[p] == '+' || text[p] == '-') && text[p - 1] != '/') {
      split = p;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(0, parse_imag(text, 0, body));
  return Scalar(parse_rational(text, 0, split), parse_imag(text, split, body));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (sgn(im_) == 0 && sgn(other.im_) == 0) {
    re_ *= other.re_;
    return *this;
  }
  mpq_class re = re_ * other.re_ - im_ * other.im_;
  mpq_class im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw DivisionByZero();
  if (sgn(other.im_) == 0) {
    re_ /= other.re_;
    im_ /= other.re_;
    return *this;
  }
  return *this *= other.inverse();
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  return re_.get_str() + (imag[0] == '-' ? "" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace postlie
