#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "basechange/rational.hpp"

namespace basechange {

/// Exact complex number a + b*i with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(std::int64_t re) : re_(re) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  bool on_unit_circle() const { return norm() == 1; }
  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational inverse() const {
    require(!is_zero(), ErrorKind::InvalidInput, "inverse of zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Lexicographic on (re, im); only used to canonicalize multisets.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.im_ != b.im_) return a.im_ < b.im_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << to_string(z.re_) << (z.im_ < 0 ? "-" : "+") << to_string(abs(z.im_)) << "i";
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// z^m for any integer m; negative m requires z != 0.
inline GaussianRational pow(const GaussianRational& z, std::int64_t m) {
  GaussianRational base = m < 0 ? z.inverse() : z;
  std::uint64_t e = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
  GaussianRational result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace basechange
