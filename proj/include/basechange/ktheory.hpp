#pragma once

// K^0 and K^1 of finite disjoint unions of circles and the integer matrices
// induced by proper, component-matched maps between them.
//
// Matrix convention: rows are source components, columns are target
// components. Entry (s, t) is the coefficient of the source generator in
// the image of the target generator under the contravariant map
// K^j(target) -> K^j(source).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "basechange/error.hpp"
#include "basechange/rational.hpp"

namespace basechange {

struct CircleComponent {
  std::string label;
  /// Set when the circle stands in for Sym^n(T) via [z_1..z_n] -> z_1...z_n.
  std::optional<int> reduced_from_sym_power;
  friend bool operator==(const CircleComponent&, const CircleComponent&) = default;
};

class CircleSpace {
 public:
  CircleSpace() = default;
  explicit CircleSpace(std::vector<CircleComponent> components) : components_(std::move(components)) {
    std::set<std::string> seen;
    for (const auto& c : components_)
      require(seen.insert(c.label).second, ErrorKind::InvalidInput, "duplicate circle label '" + c.label + "'");
  }
  static CircleSpace from_labels(const std::vector<std::string>& labels) {
    std::vector<CircleComponent> comps;
    for (const auto& l : labels) comps.push_back({l, std::nullopt});
    return CircleSpace(std::move(comps));
  }

  const std::vector<CircleComponent>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < components_.size(); ++i)
      if (components_[i].label == label) return i;
    return std::nullopt;
  }
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& c : components_) out.push_back(c.label);
    return out;
  }

  friend bool operator==(const CircleSpace&, const CircleSpace&) = default;

 private:
  std::vector<CircleComponent> components_;
};

/// Source circle s maps onto target circle t by a map of degree d.
struct CircleMatch {
  std::size_t source;
  std::size_t target;
  std::int64_t degree;
  friend bool operator==(const CircleMatch&, const CircleMatch&) = default;
};

class ProperCircleMap {
 public:
  ProperCircleMap(CircleSpace source, CircleSpace target, std::vector<CircleMatch> matches)
      : source_(std::move(source)), target_(std::move(target)), matches_(std::move(matches)) {
    std::set<std::size_t> used;
    for (const auto& m : matches_) {
      require(m.source < source_.size() && m.target < target_.size(), ErrorKind::InvalidInput,
              "match refers to a missing component");
      require(m.degree >= 1, ErrorKind::InvalidInput, "circle map degrees must be positive");
      require(used.insert(m.source).second, ErrorKind::InvalidInput,
              "source component '" + source_.components()[m.source].label + "' is matched twice");
    }
    std::sort(matches_.begin(), matches_.end(),
              [](const CircleMatch& a, const CircleMatch& b) { return a.source < b.source; });
  }

  static ProperCircleMap identity(const CircleSpace& space) {
    std::vector<CircleMatch> ms;
    for (std::size_t i = 0; i < space.size(); ++i) ms.push_back({i, i, 1});
    return {space, space, std::move(ms)};
  }

  const CircleSpace& source() const { return source_; }
  const CircleSpace& target() const { return target_; }
  const std::vector<CircleMatch>& matches() const { return matches_; }

  std::optional<CircleMatch> match_of(std::size_t source) const {
    for (const auto& m : matches_)
      if (m.source == source) return m;
    return std::nullopt;
  }

 private:
  CircleSpace source_;
  CircleSpace target_;
  std::vector<CircleMatch> matches_;
};

/// first then second (second after first).
inline ProperCircleMap compose(const ProperCircleMap& first, const ProperCircleMap& second) {
  require(first.target() == second.source(), ErrorKind::InvalidInput, "maps are not composable");
  std::vector<CircleMatch> ms;
  for (const auto& m : first.matches())
    if (auto n = second.match_of(m.target)) ms.push_back({m.source, n->target, m.degree * n->degree});
  return {first.source(), second.target(), std::move(ms)};
}

struct KGroup {
  int degree = 0;                   // 0 or 1
  std::vector<std::string> basis;   // one generator per circle
  std::size_t rank() const { return basis.size(); }
};

inline std::pair<KGroup, KGroup> k_groups(const CircleSpace& space) {
  return {KGroup{0, space.labels()}, KGroup{1, space.labels()}};
}

/// Dense integer matrix with labeled rows (source) and columns (target).
class KMorphism {
 public:
  struct Triplet {
    std::size_t row, col;
    BigInt value;
    friend bool operator==(const Triplet&, const Triplet&) = default;
  };

  KMorphism(std::vector<std::string> rows, std::vector<std::string> cols)
      : rows_(std::move(rows)), cols_(std::move(cols)),
        entries_(rows_.size(), std::vector<BigInt>(cols_.size(), BigInt(0))) {}

  const std::vector<std::string>& rows() const { return rows_; }
  const std::vector<std::string>& cols() const { return cols_; }
  const BigInt& at(std::size_t r, std::size_t c) const { return entries_.at(r).at(c); }
  BigInt& at(std::size_t r, std::size_t c) { return entries_.at(r).at(c); }
  const std::vector<std::vector<BigInt>>& entries() const { return entries_; }

  std::vector<Triplet> sparse() const {
    std::vector<Triplet> out;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < cols_.size(); ++c)
        if (entries_[r][c] != 0) out.push_back({r, c, entries_[r][c]});
    return out;
  }

  static KMorphism from_sparse(std::vector<std::string> rows, std::vector<std::string> cols,
                               const std::vector<Triplet>& triplets) {
    KMorphism m(std::move(rows), std::move(cols));
    for (const auto& t : triplets) m.at(t.row, t.col) += t.value;
    return m;
  }

  bool is_identity() const {
    if (rows_.size() != cols_.size()) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < cols_.size(); ++c)
        if (entries_[r][c] != (r == c ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const KMorphism&, const KMorphism&) = default;

 private:
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::vector<std::vector<BigInt>> entries_;
};

/// Matrix of K(g o f) = K(f) K(g): the first map's matrix times the second's.
inline KMorphism operator*(const KMorphism& a, const KMorphism& b) {
  require(a.cols() == b.rows(), ErrorKind::InvalidInput, "matrix labels do not chain");
  KMorphism out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows().size(); ++i)
    for (std::size_t k = 0; k < a.cols().size(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols().size(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

/// K^0 entry 1 and K^1 entry d on each match; zero elsewhere.
inline std::pair<KMorphism, KMorphism> induced_map(const ProperCircleMap& m) {
  KMorphism k0(m.source().labels(), m.target().labels());
  KMorphism k1(m.source().labels(), m.target().labels());
  for (const auto& match : m.matches()) {
    k0.at(match.source, match.target) = 1;
    k1.at(match.source, match.target) = match.degree;
  }
  return {std::move(k0), std::move(k1)};
}

/// Sym^n(T) with (z_i) -> (z_i^f) is replaced by T with z -> z^f, through
/// the homotopy equivalence [z_1..z_n] -> z_1...z_n.
struct ReducedComponent {
  CircleComponent circle;
  std::int64_t degree;
};

inline ReducedComponent reduce_symmetric_component(int n, std::int64_t f, const std::string& label = "") {
  require(n >= 1, ErrorKind::InvalidInput, "symmetric power must be positive");
  require(f >= 1, ErrorKind::InvalidInput, "degree must be positive");
  return {CircleComponent{label.empty() ? "Sym^" + std::to_string(n) : label, n}, f};
}

/// Winding number of z -> z^f traced over the N-th roots of unity, using
/// exact angles in turns. Each step advances the image by f/N turns; the
/// increment is reduced to the principal range (-1/2, 1/2], which is exact
/// as long as f/N < 1/2 (N >= 4f leaves a margin).
inline std::int64_t circle_degree_oracle(std::int64_t f, std::int64_t samples) {
  require(f >= 1, ErrorKind::InvalidInput, "degree must be positive");
  require(samples >= 4 * f, ErrorKind::InsufficientSamples,
          std::to_string(samples) + " samples cannot resolve degree " + std::to_string(f) + " (need >= 4f)");
  auto image_angle = [&](std::int64_t k) {
    Rational a = Rational(k * f, samples);  // angle of (e^{2 pi i k/N})^f
    return a - Rational(floor(a));          // normalized to [0, 1)
  };
  Rational total = 0;
  for (std::int64_t k = 0; k < samples; ++k) {
    Rational step = image_angle(k + 1) - image_angle(k);
    if (step > Rational(1, 2)) step -= 1;
    if (step <= Rational(-1, 2)) step += 1;
    total += step;
  }
  require(is_integer(total), ErrorKind::InvalidInput, "winding sum is not integral");
  return static_cast<std::int64_t>(numerator(total));
}

}  // namespace basechange
