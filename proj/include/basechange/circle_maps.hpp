#pragma once

// Base-change maps viewed as proper maps of disjoint unions of circles, the
// input of the K-theory computation.

#include <string>
#include <vector>

#include "basechange/gl2_cuspidal.hpp"
#include "basechange/ktheory.hpp"
#include "basechange/tempered_gl1.hpp"

namespace basechange {

inline CircleSpace circle_space(const TemperedDualGL1& dual, const std::string& prefix) {
  std::vector<std::string> labels;
  for (const auto& l : dual.circles()) labels.push_back(prefix + l.name());
  return CircleSpace::from_labels(labels);
}

/// Labels are "F:c<conductor>.j<index>" and "E:c<conductor>.j<index>".
inline ProperCircleMap gl1_circle_map(const Gl1BaseChange& bc) {
  auto src = circle_space(bc.source, "F:");
  auto tgt = circle_space(bc.target, "E:");
  std::vector<CircleMatch> ms;
  for (const auto& p : bc.pairs) {
    auto s = src.index_of("F:" + p.from.name());
    auto t = tgt.index_of("E:" + p.to.name());
    require(s && t, ErrorKind::InvalidInput, "pair refers to a circle outside the duals");
    ms.push_back({*s, *t, p.degree});
  }
  return {std::move(src), std::move(tgt), std::move(ms)};
}

/// The single circle T_(E/F, xi) -> T_(EL/L, xi_L).
inline ProperCircleMap gl2_circle_map(const AdmissiblePair& source, const Gl2BaseChange& bc) {
  auto src = CircleSpace::from_labels({"F:" + source.name()});
  auto tgt = CircleSpace::from_labels({"L:" + bc.target.name()});
  return {std::move(src), std::move(tgt), {{0, 0, bc.degree}}};
}

}  // namespace basechange
