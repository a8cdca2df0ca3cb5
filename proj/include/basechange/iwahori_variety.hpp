#pragma once

// The extended quotient (C^x)^n // S_n and the base-change morphism
// (z_1, ..., z_r) -> (z_1^f, ..., z_r^f) on its components.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "basechange/error.hpp"
#include "basechange/gaussian.hpp"

namespace basechange {

inline constexpr int kMaxExtendedQuotientRank = 30;

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    require(!parts_.empty(), ErrorKind::InvalidInput, "partition must have at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] >= 1, ErrorKind::InvalidInput, "partition parts must be positive");
      require(i == 0 || parts_[i] <= parts_[i - 1], ErrorKind::InvalidInput,
              "partition parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in reverse-lexicographic order: (n), (n-1, 1), ...
inline std::vector<Partition> partitions(int n) {
  require(n >= 1, ErrorKind::InvalidInput, "partitions of n need n >= 1");
  std::vector<Partition> out;
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    // Find the rightmost part > 1, decrease it, and redistribute the tail
    // greedily in parts no larger than the decreased value.
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    int k = --a.back();
    int rest = ones + 1;
    while (rest > 0) {
      a.push_back(std::min(k, rest));
      rest -= a.back();
    }
  }
  return out;
}

/// X^gamma / Z_gamma for gamma of a given cycle type: one symmetric power of
/// C^x per distinct cycle length, raised to the multiplicity of that length.
struct OrbitComponent {
  struct Factor {
    int part_size;     // n_i
    int multiplicity;  // r_i; the factor is Sym^{r_i}(C^x)
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Partition partition;
  std::vector<Factor> factors;  // part sizes strictly decreasing

  int dimension() const {
    int d = 0;
    for (const auto& fac : factors) d += fac.multiplicity;
    return d;
  }
  int rank() const {
    int n = 0;
    for (const auto& fac : factors) n += fac.part_size * fac.multiplicity;
    return n;
  }
  std::vector<int> sym_powers() const {
    std::vector<int> out;
    for (const auto& fac : factors) out.push_back(fac.multiplicity);
    return out;
  }

  friend bool operator==(const OrbitComponent&, const OrbitComponent&) = default;
};

inline OrbitComponent fixed_component(int n, const Partition& cycle_type) {
  require(cycle_type.size() == n, ErrorKind::InvalidInput,
          "cycle type sums to " + std::to_string(cycle_type.size()) + ", expected " + std::to_string(n));
  OrbitComponent c{cycle_type, {}};
  for (int part : cycle_type.parts()) {
    if (!c.factors.empty() && c.factors.back().part_size == part)
      ++c.factors.back().multiplicity;
    else
      c.factors.push_back({part, 1});
  }
  return c;
}

struct ExtendedQuotient {
  int n = 0;
  std::vector<OrbitComponent> components;
};

inline ExtendedQuotient extended_quotient(int n) {
  require(n >= 1 && n <= kMaxExtendedQuotientRank, ErrorKind::InvalidInput,
          "n must lie in [1, " + std::to_string(kMaxExtendedQuotientRank) + "], got " + std::to_string(n));
  ExtendedQuotient q{n, {}};
  for (const auto& p : partitions(n)) q.components.push_back(fixed_component(n, p));
  return q;
}

/// A point of Sym^{r_1}(C^x) x ... x Sym^{r_l}(C^x). Each factor is kept
/// sorted so that equality is multiset equality.
class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<std::vector<GaussianRational>> factors) : factors_(std::move(factors)) {
    for (auto& fac : factors_) {
      for (const auto& z : fac) require(!z.is_zero(), ErrorKind::InvalidInput, "torus coordinates must be nonzero");
      std::sort(fac.begin(), fac.end());
    }
  }

  const std::vector<std::vector<GaussianRational>>& factors() const { return factors_; }

  bool lies_on(const OrbitComponent& c) const {
    if (factors_.size() != c.factors.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (static_cast<int>(factors_[i].size()) != c.factors[i].multiplicity) return false;
    return true;
  }

  bool on_compact_torus() const {
    for (const auto& fac : factors_)
      for (const auto& z : fac)
        if (!z.on_unit_circle()) return false;
    return true;
  }

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  std::vector<std::vector<GaussianRational>> factors_;
};

inline TorusPoint base_change_point(const OrbitComponent& c, const TorusPoint& x, std::int64_t f) {
  require(f >= 1, ErrorKind::InvalidInput, "residue degree must be positive");
  require(x.lies_on(c), ErrorKind::InvalidInput, "point does not lie on the component");
  auto out = x.factors();
  for (auto& fac : out)
    for (auto& z : fac) z = pow(z, f);
  return TorusPoint(std::move(out));
}

/// Unramified twists of the Steinberg representation: the curve C^x, z -> z^f.
inline GaussianRational steinberg_curve_bc(const GaussianRational& z, std::int64_t f) {
  require(!z.is_zero(), ErrorKind::InvalidInput, "coordinate must be nonzero");
  require(f >= 1, ErrorKind::InvalidInput, "residue degree must be positive");
  return pow(z, f);
}

/// Spherical (Satake) component Sym^n(C^x); same map on the full symmetric power.
inline TorusPoint satake_bc(const TorusPoint& x, std::int64_t f) {
  require(x.factors().size() == 1, ErrorKind::InvalidInput, "Satake points live on a single Sym^n factor");
  const int n = static_cast<int>(x.factors().front().size());
  require(n >= 1, ErrorKind::InvalidInput, "empty Satake point");
  return base_change_point(fixed_component(n, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))), x, f);
}

}  // namespace basechange
