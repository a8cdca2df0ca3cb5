#pragma once

// Admissible pairs (E/F, xi) with E/F totally ramified quadratic, and base
// change along unramified L/F of odd degree on the circles they label.

#include <cstdint>
#include <string>
#include <vector>

#include "basechange/error.hpp"
#include "basechange/extension_tower.hpp"
#include "basechange/tempered_gl1.hpp"

namespace basechange {

struct XiLabel {
  CharacterLabel label;
  bool unitary = true;
  friend bool operator==(const XiLabel&, const XiLabel&) = default;
};

/// (E/F, xi). The two admissibility conditions are certified flags:
///   not_norm_factor       -- xi does not factor through N_{E/F};
///   level_one_norm_factor -- xi restricted to U_E^1 does factor through N_{E/F}.
struct AdmissiblePair {
  ExtensionProfile quad;
  XiLabel xi;
  bool not_norm_factor = true;
  bool level_one_norm_factor = false;

  std::string name() const {
    return "(E/F q=" + std::to_string(quad.ext.base.q) + " e=" + std::to_string(quad.ext.e) + " f=" + std::to_string(quad.ext.f) + ", xi " + xi.label.name() +
           ")";
  }

  friend bool operator==(const AdmissiblePair& a, const AdmissiblePair& b) {
    return a.quad.ext == b.quad.ext && a.quad.filtration == b.quad.filtration && a.xi == b.xi &&
           a.not_norm_factor == b.not_norm_factor && a.level_one_norm_factor == b.level_one_norm_factor;
  }
};

struct AdmissibilityReport {
  bool valid = true;
  bool condition1 = true;  // xi does not factor through the norm
  bool condition2 = true;  // factoring on U_E^1 forces E/F unramified
  bool quadratic = true;
  std::vector<std::string> failures;
};

inline AdmissibilityReport validate_admissible(const AdmissiblePair& pair) {
  AdmissibilityReport rep;
  rep.quadratic = pair.quad.ext.degree() == 2;
  if (!rep.quadratic) rep.failures.push_back("E/F is not quadratic");
  rep.condition1 = pair.not_norm_factor;
  if (!rep.condition1) rep.failures.push_back("condition (1): xi factors through the norm map");
  rep.condition2 = !pair.level_one_norm_factor || pair.quad.ext.is_unramified();
  if (!rep.condition2) rep.failures.push_back("condition (2): xi|U_E^1 factors through the norm but E/F is ramified");
  rep.valid = rep.failures.empty();
  return rep;
}

/// The circle T_(E/F, xi) with its torsion number.
struct CuspidalCircle {
  AdmissiblePair label;
  std::int64_t torsion_number = 1;
};

struct Compositum {
  ExtensionData el_over_l;  // EL/L
  ExtensionData el_over_e;  // EL/E
};

inline void check_totally_ramified_quadratic(const ExtensionData& quad) {
  require(quad.e == 2 && quad.f == 1, ErrorKind::OutOfScope, "E/F must be totally ramified quadratic");
  require(quad.base.char_zero, ErrorKind::OutOfScope, "base field must have characteristic 0");
  require(quad.base.p != 2, ErrorKind::OutOfScope, "residue characteristic 2 is excluded");
}

inline void check_unramified_odd(const ExtensionData& quad, const ExtensionData& l) {
  require(l.base == quad.base, ErrorKind::MismatchedResidueData, "L/F and E/F have different base fields");
  require(l.is_unramified(), ErrorKind::NotUnramified, "L/F must be unramified");
  require(l.f % 2 == 1, ErrorKind::EvenDegree, "L/F must have odd degree, got " + std::to_string(l.f));
}

/// EL/E is unramified of degree f(L/F); EL/L is totally ramified quadratic.
inline Compositum compositum_invariants(const ExtensionData& quad, const ExtensionData& l) {
  check_totally_ramified_quadratic(quad);
  check_unramified_odd(quad, l);
  Compositum c{ExtensionData{l.top_field(), 2, 1, quad.galois, quad.cyclic},
               ExtensionData{quad.top_field(), 1, l.f, true, true}};
  // Both factorizations of EL/F must agree.
  const auto via_l = compose_tower(l, c.el_over_l);
  const auto via_e = compose_tower(quad, c.el_over_e);
  require(via_l.e == via_e.e && via_l.f == via_e.f, ErrorKind::InvalidInput, "inconsistent compositum invariants");
  return c;
}

struct Gl2BaseChange {
  AdmissiblePair target;  // (EL/L, xi_L)
  std::int64_t degree = 1;
  std::int64_t conductor = 0;
  std::int64_t torsion_number = 1;
  Compositum compositum;
};

/// T_(E/F, xi) -> T_(EL/L, xi_L), z -> z^{f(L/F)}, with xi_L = xi o N_{EL/E}
/// and c(xi_L) = psi_{EL/E}(c(xi)) = c(xi).
inline Gl2BaseChange bc_gl2(const AdmissiblePair& pair, const ExtensionData& l) {
  auto rep = validate_admissible(pair);
  if (!rep.valid) throw Error(ErrorKind::InvalidInput, "pair is not admissible: " + rep.failures.front());
  check_totally_ramified_quadratic(pair.quad.ext);
  pair.quad.validate();
  l.validate();
  require(pair.xi.unitary, ErrorKind::OutOfScope, "xi must be unitary");
  const auto comp = compositum_invariants(pair.quad.ext, l);

  // EL/E is unramified, so psi_{EL/E} is the identity.
  const auto conductor = conductor_transport(RamificationFiltration::unramified(), pair.xi.label.conductor);

  AdmissiblePair target = pair;
  // p != 2, so EL/L is tamely ramified.
  target.quad = ExtensionProfile{comp.el_over_l, RamificationFiltration::tame(2)};
  target.xi.label.conductor = conductor;
  return {std::move(target), l.f, conductor, 1, comp};
}

}  // namespace basechange
