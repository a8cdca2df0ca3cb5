#pragma once

// Tempered dual of GL(1) as a labeled disjoint union of circles, the Weil
// degree identity f * d_E(w) = d_F(w), and GL(1) base change chi -> chi o N.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "basechange/error.hpp"
#include "basechange/extension_tower.hpp"
#include "basechange/gaussian.hpp"

namespace basechange {

enum class FieldSide { E, F };

/// Degree d(w) of an abstract Weil group element, tagged with its field.
struct FormalWeilDegree {
  std::int64_t m = 0;
  FieldSide side = FieldSide::E;
  friend bool operator==(const FormalWeilDegree&, const FormalWeilDegree&) = default;
};

/// W_E inside W_F: d_F(w) = f * d_E(w).
inline FormalWeilDegree include_weil(const FormalWeilDegree& d, std::int64_t f) {
  require(d.side == FieldSide::E, ErrorKind::InvalidInput, "include_weil takes an E-side degree");
  require(f >= 1, ErrorKind::InvalidInput, "residue degree must be positive");
  return {d.m * f, FieldSide::F};
}

/// w -> z^{d(w)}.
class UnramifiedQuasicharacter {
 public:
  explicit UnramifiedQuasicharacter(GaussianRational z) : z_(std::move(z)) {
    require(!z_.is_zero(), ErrorKind::InvalidInput, "quasicharacter parameter must be nonzero");
  }

  const GaussianRational& parameter() const { return z_; }
  bool tempered() const { return z_.on_unit_circle(); }
  GaussianRational operator()(const FormalWeilDegree& d) const { return pow(z_, d.m); }

  friend bool operator==(const UnramifiedQuasicharacter&, const UnramifiedQuasicharacter&) = default;

 private:
  GaussianRational z_;
};

inline UnramifiedQuasicharacter bc_unramified_quasichar(const UnramifiedQuasicharacter& psi, std::int64_t f) {
  require(f >= 1, ErrorKind::InvalidInput, "residue degree must be positive");
  return UnramifiedQuasicharacter(pow(psi.parameter(), f));
}

/// Opaque label of a character of U_F: its conductor and an index among the
/// characters of that conductor. The enumeration is not canonical.
struct CharacterLabel {
  std::int64_t conductor = 0;
  std::int64_t index = 0;

  std::string name() const { return "c" + std::to_string(conductor) + ".j" + std::to_string(index); }

  friend bool operator==(const CharacterLabel&, const CharacterLabel&) = default;
  friend auto operator<=>(const CharacterLabel&, const CharacterLabel&) = default;
};

/// Number of characters of U_F with conductor exactly c: 1, q - 2, then
/// (q - 1)^2 q^(c - 2). Partial sums are |U_F / U_F^c|.
inline BigInt characters_with_conductor(std::int64_t q, std::int64_t c) {
  require(c >= 0, ErrorKind::InvalidInput, "conductor must be nonnegative");
  if (c == 0) return 1;
  if (c == 1) return BigInt(q - 2);
  return BigInt(q - 1) * BigInt(q - 1) * int_pow(q, c - 2);
}

inline constexpr std::int64_t kMaxDualCircles = 100000;

/// The circles T_chi with c(chi) <= M, optionally keeping at most
/// `per_conductor_cap` labels for each conductor.
class TemperedDualGL1 {
 public:
  TemperedDualGL1(std::int64_t q, std::int64_t bound, std::optional<std::int64_t> per_conductor_cap = std::nullopt)
      : q_(q), bound_(bound) {
    require(q >= 2, ErrorKind::InvalidInput, "q must be at least 2");
    require(bound >= 0, ErrorKind::InvalidInput, "truncation bound must be nonnegative");
    require(!per_conductor_cap || *per_conductor_cap >= 0, ErrorKind::InvalidInput, "cap must be nonnegative");
    for (std::int64_t c = 0; c <= bound; ++c) {
      BigInt count = characters_with_conductor(q, c);
      if (per_conductor_cap) count = std::min(count, BigInt(*per_conductor_cap));
      require(BigInt(circles_.size()) + count <= kMaxDualCircles, ErrorKind::InvalidInput,
              "truncated dual exceeds " + std::to_string(kMaxDualCircles) + " circles");
      for (std::int64_t j = 0; j < static_cast<std::int64_t>(count); ++j) circles_.push_back({c, j});
    }
  }

  /// Explicit label list (already deduplicated and sorted by the caller or not).
  TemperedDualGL1(std::int64_t q, std::int64_t bound, std::vector<CharacterLabel> circles)
      : q_(q), bound_(bound), circles_(std::move(circles)) {
    std::sort(circles_.begin(), circles_.end());
    require(std::adjacent_find(circles_.begin(), circles_.end()) == circles_.end(), ErrorKind::InvalidInput,
            "duplicate character label");
    for (const auto& l : circles_) {
      require(l.conductor >= 0 && l.conductor <= bound, ErrorKind::InvalidInput, "label conductor out of range");
      require(BigInt(l.index) < characters_with_conductor(q, l.conductor), ErrorKind::InvalidInput,
              "label " + l.name() + " exceeds the number of characters of that conductor");
    }
  }

  std::int64_t q() const { return q_; }
  std::int64_t bound() const { return bound_; }
  const std::vector<CharacterLabel>& circles() const { return circles_; }

  bool contains(const CharacterLabel& l) const { return std::binary_search(circles_.begin(), circles_.end(), l); }

 private:
  std::int64_t q_;
  std::int64_t bound_;
  std::vector<CharacterLabel> circles_;
};

/// One circle T_chiF -> T_chiE, z -> z^degree.
struct CirclePair {
  CharacterLabel from;
  CharacterLabel to;
  std::int64_t degree = 1;
  friend bool operator==(const CirclePair&, const CirclePair&) = default;
};

struct Gl1BaseChange {
  TemperedDualGL1 source;
  TemperedDualGL1 target;
  std::vector<CirclePair> pairs;
  std::map<std::int64_t, std::int64_t> conductor_map;  // c(chi_F) -> c(chi_E)
};

/// Hypotheses of the GL(1) theorem: unramified, tamely ramified, or totally
/// ramified cyclic (Galois).
inline void check_gl1_scope(const ExtensionData& ext) {
  switch (classify(ext)) {
    case RamificationClass::trivial:
    case RamificationClass::unramified:
    case RamificationClass::tame_totally_ramified:
    case RamificationClass::tame_mixed:
      return;
    case RamificationClass::wild:
      require(ext.is_totally_ramified() && ext.galois && ext.cyclic, ErrorKind::UnsupportedExtension,
              "wild extension outside the totally ramified cyclic case");
      return;
  }
}

/// GL(1) base change on the truncated dual of F. Each source label (c, j)
/// goes to (psi(c), j) on the E side with circle degree f. The target dual
/// is the E-side truncation at psi(M), capped per conductor at one more
/// label than the source uses, so unmatched target circles are present.
///
/// `collisions` optionally overrides the target of specific source labels.
inline Gl1BaseChange bc_gl1(const ExtensionData& ext, const RamificationFiltration& filt,
                            const TemperedDualGL1& dual_f,
                            const std::map<CharacterLabel, CharacterLabel>& collisions = {}) {
  filt.check_against(ext);
  check_gl1_scope(ext);
  require(dual_f.q() == ext.base.q, ErrorKind::MismatchedResidueData, "dual is not over the base field");

  std::map<std::int64_t, std::int64_t> cmap;
  for (std::int64_t c = 0; c <= dual_f.bound(); ++c) cmap[c] = conductor_transport(filt, c);

  std::vector<CirclePair> pairs;
  std::int64_t cap = 0;
  for (const auto& l : dual_f.circles()) {
    CharacterLabel to{cmap.at(l.conductor), l.index};
    if (auto it = collisions.find(l); it != collisions.end()) {
      require(it->second.conductor == to.conductor, ErrorKind::InvalidInput,
              "collision target for " + l.name() + " has the wrong conductor");
      to = it->second;
    }
    pairs.push_back({l, to, ext.f});
    cap = std::max(cap, to.index + 2);
  }

  const std::int64_t q_e = ext.top_field().q;
  const std::int64_t bound_e = cmap.at(dual_f.bound());
  std::vector<CharacterLabel> target_labels;
  for (std::int64_t c = 0; c <= bound_e; ++c) {
    BigInt count = std::min(characters_with_conductor(q_e, c), BigInt(cap));
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(count); ++j) target_labels.push_back({c, j});
  }
  for (const auto& p : pairs)
    if (std::find(target_labels.begin(), target_labels.end(), p.to) == target_labels.end())
      target_labels.push_back(p.to);
  TemperedDualGL1 dual_e(q_e, bound_e, std::move(target_labels));
  for (const auto& p : pairs)
    require(dual_e.contains(p.to), ErrorKind::InvalidInput, "target label " + p.to.name() + " is not an E character");
  return {dual_f, std::move(dual_e), std::move(pairs), std::move(cmap)};
}

/// Arc [start, end] on a circle, in turns (1 turn = full revolution).
struct TurnArc {
  Rational start;
  Rational end;
  friend bool operator==(const TurnArc&, const TurnArc&) = default;
  Rational length() const { return end - start; }
};

/// Preimage of an arc under z -> z^f: the f arcs [(s + k)/f, (e + k)/f].
inline std::vector<TurnArc> properness_check(std::int64_t degree, const TurnArc& arc) {
  require(degree >= 1, ErrorKind::InvalidInput, "circle degree must be positive");
  require(arc.start <= arc.end, ErrorKind::InvalidInput, "empty arc");
  require(arc.start >= 0 && arc.end <= 1, ErrorKind::InvalidInput, "arc must lie in [0, 1] turns");
  if (arc.start == 0 && arc.end == 1) return {arc};
  std::vector<TurnArc> out;
  for (std::int64_t k = 0; k < degree; ++k)
    out.push_back({(arc.start + k) / degree, (arc.end + k) / degree});
  return out;
}

}  // namespace basechange
