#pragma once

// Constructive finiteness check for the pullback
//   Q[t^{+-1}]^{S_r}  <-  Q[t^{+-1}]^{S_r},   t_i -> t_i^f.
//
// A = Q[t^{+-1}]^{S_r} is generated as a module over the image B of the
// pullback by the symmetrizations of t^c with c = a + f*b, 0 <= a_i < f and
// b an Artin staircase exponent (0 <= b_i <= i). The certificate picks a
// subset of those candidates greedily (a candidate is kept only if it is not
// already in the span of the kept ones) and then writes every invariant
// monomial with entries in [-D, D] as sum_k c_k * m_{f*lambda_k} * g_k.
//
// Bounds of the finite ansatz: generators must lie in the window, and the
// subring coefficients m_{f*lambda} have entries |f*lambda_i| <= 2D.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "basechange/error.hpp"
#include "basechange/invariant_laurent.hpp"
#include "basechange/rational.hpp"

namespace basechange {

inline constexpr int kMaxCertificateVariables = 3;
inline constexpr std::int64_t kMaxCertificateDegree = 4;

class WindowTooSmall : public Error {
 public:
  WindowTooSmall(const std::string& what, std::int64_t suggested)
      : Error(ErrorKind::WindowTooSmall, what), suggested_(suggested) {}
  /// Smallest larger window for which the certificate was found, or 0 if
  /// none was found in the search range.
  std::int64_t suggested_window() const noexcept { return suggested_; }

 private:
  std::int64_t suggested_;
};

struct FinitenessCertificate {
  struct Term {
    Exponent subring_exponent;  // f * lambda: the pulled-back m_lambda
    std::size_t generator;      // index into generators
    Rational coefficient;
  };
  struct Reduction {
    Exponent target;  // sorted weakly decreasing
    std::vector<Term> terms;
  };

  int r = 0;
  std::int64_t f = 0;
  std::int64_t window = 0;
  std::vector<Exponent> generators;
  std::vector<Reduction> reductions;

  /// Recomputes sum_k c_k * m_{subring_exponent} * m_{generator} for a reduction.
  InvariantLaurentPoly evaluate(const Reduction& red) const {
    InvariantLaurentPoly sum(r);
    for (const auto& t : red.terms)
      sum += InvariantLaurentPoly::monomial_symmetric(t.subring_exponent) *
             InvariantLaurentPoly::monomial_symmetric(generators.at(t.generator)) * t.coefficient;
    return sum;
  }
};

namespace detail {

inline std::int64_t mod_pos(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

inline std::int64_t degree(const Exponent& a) {
  std::int64_t d = 0;
  for (auto v : a) d += v;
  return d;
}

/// Sorted multiset of residues mod f; products m_{f*lambda} * m_c only
/// contain monomials of the residue class of c.
inline Exponent residue_class(const Exponent& a, std::int64_t f) {
  Exponent out;
  for (auto v : a) out.push_back(mod_pos(v, f));
  return sorted_desc(out);
}

/// All weakly decreasing vectors of length r with entries in [lo, hi].
inline std::vector<Exponent> decreasing_vectors(int r, std::int64_t lo, std::int64_t hi) {
  std::vector<Exponent> out;
  if (hi < lo) return out;
  Exponent cur;
  auto rec = [&](auto&& self, std::int64_t max_entry) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = max_entry; v >= lo; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, hi);
  return out;
}

/// Candidate generators a + f*b, deduplicated up to S_r and ordered by
/// (total degree, lexicographic).
inline std::vector<Exponent> candidate_pool(int r, std::int64_t f) {
  std::set<Exponent> seen;
  Exponent a(static_cast<std::size_t>(r), 0), b(static_cast<std::size_t>(r), 0);
  auto rec_b = [&](auto&& self, std::size_t i) -> void {
    if (i == b.size()) {
      Exponent c(a.size());
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + f * b[k];
      seen.insert(sorted_desc(c));
      return;
    }
    for (std::int64_t v = 0; v <= static_cast<std::int64_t>(i); ++v) {
      b[i] = v;
      self(self, i + 1);
    }
  };
  auto rec_a = [&](auto&& self, std::size_t i) -> void {
    if (i == a.size()) {
      rec_b(rec_b, 0);
      return;
    }
    for (std::int64_t v = 0; v < f; ++v) {
      a[i] = v;
      self(self, i + 1);
    }
  };
  rec_a(rec_a, 0);
  std::vector<Exponent> pool(seen.begin(), seen.end());
  std::stable_sort(pool.begin(), pool.end(), [](const Exponent& x, const Exponent& y) {
    auto dx = degree(x), dy = degree(y);
    if (dx != dy) return dx < dy;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  return pool;
}

/// Exact Gauss-Jordan elimination: finds x with sum_j x_j * columns[j] = rhs
/// for each right-hand side, or nullopt where none exists.
class ExactSpanSolver {
 public:
  using Vec = std::map<Exponent, Rational>;

  ExactSpanSolver(const std::vector<Vec>& columns, const std::vector<Vec>& rhs) {
    std::map<Exponent, std::size_t> row_index;
    auto index_rows = [&](const Vec& v) {
      for (const auto& [k, c] : v) row_index.emplace(k, 0);
    };
    for (const auto& c : columns) index_rows(c);
    for (const auto& c : rhs) index_rows(c);
    std::size_t nr = 0;
    for (auto& [k, idx] : row_index) idx = nr++;

    ncols_ = columns.size();
    nrhs_ = rhs.size();
    const std::size_t width = ncols_ + nrhs_;
    m_.assign(nr, std::vector<Rational>(width, Rational(0)));
    for (std::size_t j = 0; j < ncols_; ++j)
      for (const auto& [k, c] : columns[j]) m_[row_index[k]][j] = c;
    for (std::size_t j = 0; j < nrhs_; ++j)
      for (const auto& [k, c] : rhs[j]) m_[row_index[k]][ncols_ + j] = c;
    eliminate();
  }

  std::optional<std::vector<Rational>> solution(std::size_t k) const {
    const std::size_t col = ncols_ + k;
    for (std::size_t i = pivots_.size(); i < m_.size(); ++i)
      if (m_[i][col] != 0) return std::nullopt;
    std::vector<Rational> x(ncols_, Rational(0));
    for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = m_[i][col];
    return x;
  }

 private:
  void eliminate() {
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols_ && row < m_.size(); ++col) {
      std::size_t piv = row;
      while (piv < m_.size() && m_[piv][col] == 0) ++piv;
      if (piv == m_.size()) continue;
      std::swap(m_[row], m_[piv]);
      const Rational inv = Rational(1) / m_[row][col];
      for (auto& v : m_[row])
        if (v != 0) v *= inv;
      for (std::size_t i = 0; i < m_.size(); ++i) {
        if (i == row || m_[i][col] == 0) continue;
        const Rational factor = m_[i][col];
        for (std::size_t j = col; j < m_[i].size(); ++j)
          if (m_[row][j] != 0) m_[i][j] -= factor * m_[row][j];
      }
      pivots_.push_back(col);
      ++row;
    }
  }

  std::size_t ncols_ = 0, nrhs_ = 0;
  std::vector<std::vector<Rational>> m_;
  std::vector<std::size_t> pivots_;
};

/// Window-bounded search space for one (r, f, D).
class ReductionSpace {
 public:
  ReductionSpace(int r, std::int64_t f, std::int64_t window) : r_(r), f_(f) {
    const std::int64_t bound = (2 * window) / f;
    for (auto& lam : decreasing_vectors(r, -bound, bound)) {
      for (auto& v : lam) v *= f;
      coeffs_by_degree_[degree(lam)].push_back(lam);
    }
  }

  struct Column {
    Exponent subring_exponent;
    std::size_t generator;
  };

  /// Solves for several targets sharing the bucket (degree, residue class).
  std::vector<std::optional<std::vector<FinitenessCertificate::Term>>> solve(
      const std::vector<Exponent>& generators, const std::vector<Exponent>& targets) const {
    std::vector<std::optional<std::vector<FinitenessCertificate::Term>>> out(targets.size());
    if (targets.empty()) return out;
    const auto d = degree(targets.front());
    const auto cls = residue_class(targets.front(), f_);

    std::vector<Column> cols;
    std::vector<ExactSpanSolver::Vec> col_vecs;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (residue_class(generators[g], f_) != cls) continue;
      auto it = coeffs_by_degree_.find(d - degree(generators[g]));
      if (it == coeffs_by_degree_.end()) continue;
      const auto gen_poly = InvariantLaurentPoly::monomial_symmetric(generators[g]);
      for (const auto& lam : it->second) {
        auto prod = InvariantLaurentPoly::monomial_symmetric(lam) * gen_poly;
        cols.push_back({lam, g});
        col_vecs.emplace_back(prod.terms().begin(), prod.terms().end());
      }
    }
    std::vector<ExactSpanSolver::Vec> rhs;
    for (const auto& t : targets) rhs.push_back({{t, Rational(1)}});
    ExactSpanSolver solver(col_vecs, rhs);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      auto x = solver.solution(k);
      if (!x) continue;
      std::vector<FinitenessCertificate::Term> terms;
      for (std::size_t j = 0; j < x->size(); ++j)
        if ((*x)[j] != 0) terms.push_back({cols[j].subring_exponent, cols[j].generator, (*x)[j]});
      out[k] = std::move(terms);
    }
    return out;
  }

 private:
  int r_;
  std::int64_t f_;
  std::map<std::int64_t, std::vector<Exponent>> coeffs_by_degree_;
};

/// Attempts the certificate; returns the first target that fails, if any.
inline std::optional<Exponent> try_certificate(int r, std::int64_t f, std::int64_t window,
                                               FinitenessCertificate& cert) {
  cert = FinitenessCertificate{r, f, window, {}, {}};
  ReductionSpace space(r, f, window);

  for (const auto& cand : candidate_pool(r, f)) {
    if (cand.front() > window) continue;
    if (cert.generators.empty() || !space.solve(cert.generators, {cand}).front())
      cert.generators.push_back(cand);
  }

  std::map<std::pair<std::int64_t, Exponent>, std::vector<Exponent>> buckets;
  for (auto& t : decreasing_vectors(r, -window, window)) buckets[{degree(t), residue_class(t, f)}].push_back(t);

  for (const auto& [key, targets] : buckets) {
    auto sols = space.solve(cert.generators, targets);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      if (!sols[k]) return targets[k];
      cert.reductions.push_back({targets[k], std::move(*sols[k])});
    }
  }
  std::sort(cert.reductions.begin(), cert.reductions.end(),
            [](const auto& x, const auto& y) { return x.target > y.target; });
  return std::nullopt;
}

}  // namespace detail

inline void check_certificate_parameters(int r, std::int64_t f, std::int64_t window) {
  require(r >= 1 && r <= kMaxCertificateVariables, ErrorKind::InvalidInput,
          "certificates are computed for 1 <= r <= " + std::to_string(kMaxCertificateVariables));
  require(f >= 1 && f <= kMaxCertificateDegree, ErrorKind::InvalidInput,
          "certificates are computed for 1 <= f <= " + std::to_string(kMaxCertificateDegree));
  require(window >= 0, ErrorKind::InvalidInput, "window must be nonnegative");
}

/// Throws WindowTooSmall when some in-window invariant monomial has no
/// expression; the exception carries the next window that succeeds.
inline FinitenessCertificate finiteness_certificate(int r, std::int64_t f, std::int64_t window) {
  check_certificate_parameters(r, f, window);
  FinitenessCertificate cert;
  auto failed = detail::try_certificate(r, f, window, cert);
  if (!failed) return cert;

  std::string target = "(";
  for (std::size_t i = 0; i < failed->size(); ++i) target += (i ? "," : "") + std::to_string((*failed)[i]);
  target += ")";
  std::int64_t suggested = 0;
  for (std::int64_t w = window + 1; w <= window + 2 * f * r + 2; ++w) {
    FinitenessCertificate probe;
    if (!detail::try_certificate(r, f, w, probe)) {
      suggested = w;
      break;
    }
  }
  throw WindowTooSmall("no reduction for m" + target + " with window " + std::to_string(window) +
                           (suggested ? "; window " + std::to_string(suggested) + " succeeds" : ""),
                       suggested);
}

}  // namespace basechange
