#pragma once

// Finite extensions of nonarchimedean local fields, modeled by their
// numerical invariants, together with the ramification-theoretic functions
// (phi, psi, norm filtration transport, conductor transport) they determine.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "basechange/error.hpp"
#include "basechange/rational.hpp"

namespace basechange {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline BigInt int_pow(std::int64_t base, std::int64_t exp) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Residue data of a local field: q = |k_F|, p = char(k_F).
struct LocalFieldData {
  std::int64_t q = 0;
  std::int64_t p = 0;
  bool char_zero = true;

  static LocalFieldData make(std::int64_t q, std::int64_t p, bool char_zero = true) {
    LocalFieldData d{q, p, char_zero};
    d.validate();
    return d;
  }

  void validate() const {
    require(is_prime(p), ErrorKind::InvalidInput, "residue characteristic " + std::to_string(p) + " is not prime");
    require(q >= p, ErrorKind::InvalidInput, "residue cardinality must be a positive power of p");
    std::int64_t r = q;
    while (r % p == 0) r /= p;
    require(r == 1, ErrorKind::InvalidInput,
            "residue cardinality " + std::to_string(q) + " is not a power of " + std::to_string(p));
  }

  friend bool operator==(const LocalFieldData&, const LocalFieldData&) = default;
};

enum class RamificationClass { trivial, unramified, tame_totally_ramified, tame_mixed, wild };

inline std::string_view to_string(RamificationClass c) {
  switch (c) {
    case RamificationClass::trivial: return "trivial";
    case RamificationClass::unramified: return "unramified";
    case RamificationClass::tame_totally_ramified: return "tame_totally_ramified";
    case RamificationClass::tame_mixed: return "tame_mixed";
    case RamificationClass::wild: return "wild";
  }
  return "unknown";
}

/// E/F described by (e, f) over the residue data of F.
struct ExtensionData {
  LocalFieldData base;
  std::int64_t e = 1;
  std::int64_t f = 1;
  bool galois = true;
  bool cyclic = true;

  static ExtensionData make(LocalFieldData base, std::int64_t e, std::int64_t f, bool galois = true,
                            bool cyclic = true) {
    ExtensionData x{base, e, f, galois, cyclic};
    x.validate();
    return x;
  }
  static ExtensionData unramified(LocalFieldData base, std::int64_t f) { return make(base, 1, f); }
  static ExtensionData totally_ramified(LocalFieldData base, std::int64_t e, bool galois = true,
                                        bool cyclic = true) {
    return make(base, e, 1, galois, cyclic);
  }

  void validate() const {
    base.validate();
    require(e >= 1, ErrorKind::InvalidInput, "ramification index must be positive");
    require(f >= 1, ErrorKind::InvalidInput, "residue degree must be positive");
  }

  std::int64_t degree() const { return e * f; }

  /// Residue data of the top field E; only the cardinality changes.
  LocalFieldData top_field() const {
    BigInt qe = int_pow(base.q, f);
    require(qe <= BigInt(std::numeric_limits<std::int64_t>::max()), ErrorKind::InvalidInput,
            "residue cardinality q^f overflows");
    return {static_cast<std::int64_t>(qe), base.p, base.char_zero};
  }

  bool is_unramified() const { return e == 1; }
  bool is_totally_ramified() const { return f == 1; }

  friend bool operator==(const ExtensionData&, const ExtensionData&) = default;
};

inline RamificationClass classify(const ExtensionData& ext) {
  ext.validate();
  if (ext.degree() == 1) return RamificationClass::trivial;
  if (ext.e == 1) return RamificationClass::unramified;
  if (ext.e % ext.base.p == 0) return RamificationClass::wild;
  return ext.f == 1 ? RamificationClass::tame_totally_ramified : RamificationClass::tame_mixed;
}

/// Orders |G_0| >= |G_1| >= ... of the lower-numbering ramification groups.
/// Entries past the stored list are 1; an empty list means G_0 is trivial.
class RamificationFiltration {
 public:
  RamificationFiltration() = default;

  explicit RamificationFiltration(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
    while (!orders_.empty() && orders_.back() == 1) orders_.pop_back();
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      require(orders_[i] >= 1, ErrorKind::InvalidInput, "ramification group orders must be positive");
      if (i > 0)
        require(orders_[i - 1] % orders_[i] == 0, ErrorKind::InvalidInput,
                "ramification group orders must form a divisibility chain (|G_" + std::to_string(i) +
                    "| does not divide |G_" + std::to_string(i - 1) + "|)");
    }
  }

  static RamificationFiltration unramified() { return {}; }
  static RamificationFiltration tame(std::int64_t e) { return RamificationFiltration({e}); }
  /// Cyclic totally ramified of prime degree p whose last nontrivial group is G_t.
  static RamificationFiltration cyclic_prime(std::int64_t p, std::int64_t t) {
    require(t >= 0, ErrorKind::InvalidInput, "jump must be nonnegative");
    return RamificationFiltration(std::vector<std::int64_t>(static_cast<std::size_t>(t + 1), p));
  }

  const std::vector<std::int64_t>& orders() const { return orders_; }
  bool empty() const { return orders_.empty(); }

  /// |G_i| for i >= 0.
  std::int64_t order(std::int64_t i) const {
    return i < static_cast<std::int64_t>(orders_.size()) ? orders_[static_cast<std::size_t>(i)] : 1;
  }
  std::int64_t inertia_order() const { return order(0); }

  /// Non-fatal diagnostics: |G_0/G_1| should be prime to p.
  std::vector<std::string> warnings(std::int64_t p) const {
    std::vector<std::string> out;
    if (!orders_.empty() && (order(0) / order(1)) % p == 0)
      out.push_back("|G_0/G_1| = " + std::to_string(order(0) / order(1)) + " is divisible by p = " +
                    std::to_string(p));
    return out;
  }

  /// Checks agreement with (e, f): g_0 = e.
  void check_against(const ExtensionData& ext) const {
    require(inertia_order() == ext.e, ErrorKind::InvalidInput,
            "filtration has |G_0| = " + std::to_string(inertia_order()) + " but e = " + std::to_string(ext.e));
  }

  friend bool operator==(const RamificationFiltration&, const RamificationFiltration&) = default;

 private:
  std::vector<std::int64_t> orders_;
};

/// Continuous piecewise-linear function on [0, inf). The last slope extends
/// to infinity.
class PiecewiseLinearFn {
 public:
  struct Point {
    Rational x, y;
  };

  PiecewiseLinearFn(std::vector<Point> breakpoints, std::vector<Rational> slopes)
      : points_(std::move(breakpoints)), slopes_(std::move(slopes)) {
    require(!points_.empty() && points_.size() == slopes_.size(), ErrorKind::InvalidInput,
            "one slope per breakpoint is required");
  }

  const std::vector<Point>& breakpoints() const { return points_; }
  const std::vector<Rational>& slopes() const { return slopes_; }

  Rational operator()(const Rational& x) const {
    require(x >= points_.front().x, ErrorKind::InvalidInput, "argument below domain: " + to_string(x));
    auto it = std::upper_bound(points_.begin(), points_.end(), x,
                               [](const Rational& v, const Point& p) { return v < p.x; });
    std::size_t k = static_cast<std::size_t>(std::distance(points_.begin(), it)) - 1;
    return points_[k].y + (x - points_[k].x) * slopes_[k];
  }

  PiecewiseLinearFn inverse() const {
    std::vector<Point> pts;
    std::vector<Rational> sl;
    for (std::size_t k = 0; k < points_.size(); ++k) {
      pts.push_back({points_[k].y, points_[k].x});
      sl.push_back(Rational(1) / slopes_[k]);
    }
    return {std::move(pts), std::move(sl)};
  }

  bool is_increasing() const {
    return std::all_of(slopes_.begin(), slopes_.end(), [](const Rational& s) { return s > 0; });
  }
  bool is_convex() const { return std::is_sorted(slopes_.begin(), slopes_.end()); }
  bool is_concave() const { return std::is_sorted(slopes_.rbegin(), slopes_.rend()); }

 private:
  std::vector<Point> points_;
  std::vector<Rational> slopes_;
};

/// phi(u) = integral_0^u dt / (G_0 : G_t), with G_t = G_i for i-1 < t <= i.
inline PiecewiseLinearFn phi_function(const RamificationFiltration& filt) {
  const Rational g0 = filt.inertia_order();
  const auto last = static_cast<std::int64_t>(filt.orders().size());
  std::vector<PiecewiseLinearFn::Point> pts{{Rational(0), Rational(0)}};
  std::vector<Rational> slopes;
  Rational y = 0;
  // Slope on (k, k+1] is |G_{k+1}| / |G_0|; constant once k + 1 >= last.
  const std::int64_t stop = std::max<std::int64_t>(last - 1, 0);
  for (std::int64_t k = 0; k <= stop; ++k) {
    Rational s = Rational(filt.order(k + 1)) / g0;
    if (slopes.empty() || slopes.back() != s) {
      if (!slopes.empty()) pts.push_back({Rational(k), y});
      slopes.push_back(s);
    }
    y += s;
  }
  return {std::move(pts), std::move(slopes)};
}

inline PiecewiseLinearFn psi_function(const RamificationFiltration& filt) { return phi_function(filt).inverse(); }

inline Rational phi(const RamificationFiltration& filt, const Rational& u) {
  require(u >= 0, ErrorKind::InvalidInput, "phi is evaluated on u >= 0, got " + to_string(u));
  return phi_function(filt)(u);
}

/// Hasse-Herbrand function, the inverse of phi.
inline Rational psi(const RamificationFiltration& filt, const Rational& x) {
  require(x >= 0, ErrorKind::InvalidInput, "psi is evaluated on x >= 0, got " + to_string(x));
  return psi_function(filt)(x);
}

inline std::int64_t to_int64(const BigInt& v) {
  require(v >= BigInt(std::numeric_limits<std::int64_t>::min()) &&
              v <= BigInt(std::numeric_limits<std::int64_t>::max()),
          ErrorKind::InvalidInput, "integer out of 64-bit range");
  return static_cast<std::int64_t>(v);
}

/// Returns nu with N(U_E^levelE) = U_F^nu, where levelE = psi(nu).
///
/// Wild extensions are refused unless the caller certifies that E/F is
/// totally ramified Galois with G_levelE trivial; the certificate is checked
/// against the supplied orders.
inline std::int64_t norm_level_image(const ExtensionData& ext, const RamificationFiltration& filt,
                                     std::int64_t level_e, bool certified_trivial_group = false) {
  require(level_e >= 0, ErrorKind::InvalidInput, "level must be nonnegative");
  filt.check_against(ext);
  const auto cls = classify(ext);
  if (cls == RamificationClass::wild) {
    require(certified_trivial_group, ErrorKind::UnsupportedExtension,
            "wild extension without certified hypothesis G_psi(nu) = {1}");
    require(ext.galois && ext.is_totally_ramified(), ErrorKind::UnsupportedExtension,
            "wild case needs a totally ramified Galois extension");
    require(filt.order(level_e) == 1, ErrorKind::UnsupportedExtension,
            "G_" + std::to_string(level_e) + " is not trivial");
  }
  Rational nu = phi(filt, Rational(level_e));
  require(is_integer(nu), ErrorKind::NotInPsiImage,
          "level " + std::to_string(level_e) + " is not psi(nu) for an integer nu (phi = " + to_string(nu) + ")");
  return to_int64(numerator(nu));
}

/// c(chi o N_{E/F}) = psi(c(chi)); unramified characters stay unramified.
/// psi(c) is integral: on the segment after breakpoint i the slope is
/// g_0/g_{i+1}, and g_{i+1} divides every earlier order.
inline std::int64_t conductor_transport(const RamificationFiltration& filt, std::int64_t c_f) {
  require(c_f >= 0, ErrorKind::InvalidInput, "conductor must be nonnegative");
  if (c_f == 0) return 0;
  Rational c_e = psi(filt, Rational(c_f));
  require(is_integer(c_e), ErrorKind::InvalidInput,
          "psi(" + std::to_string(c_f) + ") = " + to_string(c_e) + " is not an integer");
  return to_int64(numerator(c_e));
}

/// The tower F subset K subset E from K/F (lower) and E/K (upper).
inline ExtensionData compose_tower(const ExtensionData& lower, const ExtensionData& upper) {
  lower.validate();
  upper.validate();
  require(upper.base == lower.top_field(), ErrorKind::MismatchedResidueData,
          "upper extension is not over the top field of the lower one");
  return ExtensionData{lower.base, lower.e * upper.e, lower.f * upper.f, lower.galois && upper.galois,
                       lower.cyclic && upper.cyclic};
}

/// |U_F / U_F^m| = (q - 1) q^(m - 1).
inline BigInt unit_quotient_order(std::int64_t q, std::int64_t m) {
  require(q >= 2, ErrorKind::InvalidInput, "q must be at least 2");
  require(m >= 1, ErrorKind::InvalidInput, "U/U^m needs m >= 1");
  return BigInt(q - 1) * int_pow(q, m - 1);
}

/// An extension paired with its filtration, the unit exchanged over JSON.
struct ExtensionProfile {
  ExtensionData ext;
  RamificationFiltration filtration;

  /// Fills in the filtration when it is forced by (e, p): unramified or tame.
  static ExtensionProfile with_default_filtration(const ExtensionData& ext) {
    auto cls = classify(ext);
    require(cls != RamificationClass::wild, ErrorKind::InvalidInput,
            "a wild extension needs explicit filtration_orders");
    return {ext, ext.e == 1 ? RamificationFiltration() : RamificationFiltration::tame(ext.e)};
  }

  void validate() const {
    ext.validate();
    filtration.check_against(ext);
  }
};

}  // namespace basechange
