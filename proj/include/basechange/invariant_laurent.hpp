#pragma once

// S_r-invariant Laurent polynomials over Q, stored in the basis of monomial
// symmetric functions m_a = sum of the distinct permutations of t^a, where a
// is a weakly decreasing integer vector (entries may be negative).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "basechange/error.hpp"
#include "basechange/gaussian.hpp"
#include "basechange/rational.hpp"

namespace basechange {

using Exponent = std::vector<std::int64_t>;

inline Exponent sorted_desc(Exponent a) {
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

/// Distinct permutations of a, i.e. the monomials of m_a.
inline std::vector<Exponent> orbit(const Exponent& a) {
  Exponent v = a;
  std::sort(v.begin(), v.end());
  std::vector<Exponent> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

class InvariantLaurentPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit InvariantLaurentPoly(int r) : r_(r) {
    require(r >= 1, ErrorKind::InvalidInput, "need at least one variable");
  }

  static InvariantLaurentPoly constant(int r, const Rational& c) {
    InvariantLaurentPoly p(r);
    p.add_term(Exponent(static_cast<std::size_t>(r), 0), c);
    return p;
  }
  /// m_a; a need not be sorted.
  static InvariantLaurentPoly monomial_symmetric(const Exponent& a, const Rational& c = 1) {
    InvariantLaurentPoly p(static_cast<int>(a.size()));
    p.add_term(a, c);
    return p;
  }
  /// Elementary symmetric e_k in r variables.
  static InvariantLaurentPoly elementary(int r, int k) {
    require(k >= 0 && k <= r, ErrorKind::InvalidInput, "e_k needs 0 <= k <= r");
    Exponent a(static_cast<std::size_t>(r), 0);
    std::fill(a.begin(), a.begin() + k, 1);
    return monomial_symmetric(a);
  }

  /// Builds the invariant polynomial whose monomial expansion is `full`,
  /// after checking that `full` is in fact symmetric.
  static InvariantLaurentPoly from_monomials(int r, const Terms& full) {
    InvariantLaurentPoly p(r);
    for (const auto& [a, c] : full) {
      require(static_cast<int>(a.size()) == r, ErrorKind::InvalidInput, "exponent length mismatch");
      if (c == 0) continue;
      for (const auto& b : orbit(a)) {
        auto it = full.find(b);
        require(it != full.end() && it->second == c, ErrorKind::InvalidInput, "polynomial is not symmetric");
      }
      if (std::is_sorted(a.begin(), a.end(), std::greater<>())) p.terms_[a] = c;
    }
    return p;
  }

  int variables() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& a) const {
    auto it = terms_.find(sorted_desc(a));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponent& a, const Rational& c) {
    require(static_cast<int>(a.size()) == r_, ErrorKind::InvalidInput, "exponent length mismatch");
    if (c == 0) return;
    auto key = sorted_desc(a);
    auto& slot = terms_[key];
    slot += c;
    if (slot == 0) terms_.erase(key);
  }

  /// Full monomial expansion.
  Terms expand() const {
    Terms out;
    for (const auto& [a, c] : terms_)
      for (const auto& b : orbit(a)) out[b] += c;
    return out;
  }

  InvariantLaurentPoly& operator+=(const InvariantLaurentPoly& o) {
    check_same(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  InvariantLaurentPoly& operator-=(const InvariantLaurentPoly& o) {
    check_same(o);
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
  }
  InvariantLaurentPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [a, c] : terms_) c *= s;
    return *this;
  }

  friend InvariantLaurentPoly operator+(InvariantLaurentPoly a, const InvariantLaurentPoly& b) { return a += b; }
  friend InvariantLaurentPoly operator-(InvariantLaurentPoly a, const InvariantLaurentPoly& b) { return a -= b; }
  friend InvariantLaurentPoly operator*(InvariantLaurentPoly a, const Rational& s) { return a *= s; }

  /// Product of symmetric polynomials. Only the coefficients of sorted
  /// monomials are accumulated: the product is symmetric, so the coefficient
  /// of m_b equals the coefficient of t^b.
  friend InvariantLaurentPoly operator*(const InvariantLaurentPoly& x, const InvariantLaurentPoly& y) {
    x.check_same(y);
    InvariantLaurentPoly out(x.r_);
    const auto full_y = y.expand();
    Exponent sum(static_cast<std::size_t>(x.r_));
    for (const auto& [a, ca] : x.terms_) {
      for (const auto& pa : orbit(a)) {
        for (const auto& [b, cb] : full_y) {
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = pa[i] + b[i];
          if (std::is_sorted(sum.begin(), sum.end(), std::greater<>())) {
            auto& slot = out.terms_[sum];
            slot += ca * cb;
          }
        }
      }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  template <class Scalar>
  Scalar evaluate(const std::vector<Scalar>& point) const {
    require(static_cast<int>(point.size()) == r_, ErrorKind::InvalidInput, "point dimension mismatch");
    Scalar total(0);
    for (const auto& [a, c] : expand()) {
      Scalar term(c);
      for (std::size_t i = 0; i < a.size(); ++i) term *= pow(point[i], a[i]);
      total += term;
    }
    return total;
  }

  /// Largest |exponent entry| occurring.
  std::int64_t max_abs_exponent() const {
    std::int64_t m = 0;
    for (const auto& [a, c] : terms_)
      for (auto v : a) m = std::max(m, v < 0 ? -v : v);
    return m;
  }

  friend bool operator==(const InvariantLaurentPoly&, const InvariantLaurentPoly&) = default;

 private:
  void check_same(const InvariantLaurentPoly& o) const {
    require(r_ == o.r_, ErrorKind::InvalidInput, "variable count mismatch");
  }

  int r_;
  Terms terms_;
};

/// t_i -> t_i^f, the pullback of base change on coordinate rings.
inline InvariantLaurentPoly pullback_invariant(int r, std::int64_t f, const InvariantLaurentPoly& poly) {
  require(poly.variables() == r, ErrorKind::InvalidInput, "polynomial has the wrong number of variables");
  require(f >= 1, ErrorKind::InvalidInput, "residue degree must be positive");
  InvariantLaurentPoly out(r);
  for (const auto& [a, c] : poly.terms()) {
    Exponent scaled = a;
    for (auto& v : scaled) v *= f;
    out.add_term(scaled, c);
  }
  return out;
}

}  // namespace basechange
