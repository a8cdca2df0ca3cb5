#include <gtest/gtest.h>

#include <random>

#include "basechange/circle_maps.hpp"
#include "basechange/iwahori_variety.hpp"
#include "basechange/ktheory.hpp"

namespace basechange {
namespace {

CircleSpace space(std::initializer_list<std::string> labels) { return CircleSpace::from_labels(labels); }

TEST(KGroups, RanksAreComponentCounts) {
  auto [k0, k1] = k_groups(space({"a", "b", "c"}));
  EXPECT_EQ(k0.rank(), 3u);
  EXPECT_EQ(k1.rank(), 3u);
  EXPECT_EQ(k_groups(CircleSpace()).first.rank(), 0u);
  EXPECT_THROW(space({"a", "a"}), Error);
}

TEST(InducedMap, SingleMatch) {
  ProperCircleMap m(space({"x"}), space({"y"}), {{0, 0, 3}});
  auto [k0, k1] = induced_map(m);
  EXPECT_EQ(k0.at(0, 0), 1);
  EXPECT_EQ(k1.at(0, 0), 3);
}

TEST(InducedMap, UnmatchedTargetIsZero) {
  ProperCircleMap m(space({"x"}), space({"y", "w"}), {{0, 0, 2}});
  auto [k0, k1] = induced_map(m);
  EXPECT_EQ(k1.at(0, 0), 2);
  EXPECT_EQ(k1.at(0, 1), 0);
  EXPECT_EQ(k0.at(0, 1), 0);
}

TEST(InducedMap, TwoSourcesOneTarget) {
  // Pull back the generator of the single target circle along each
  // restriction separately: each source picks up degree f.
  for (std::int64_t f : {1, 2, 5}) {
    ProperCircleMap m(space({"s1", "s2"}), space({"t"}), {{0, 0, f}, {1, 0, f}});
    auto k1 = induced_map(m).second;
    EXPECT_EQ(k1.at(0, 0), f);
    EXPECT_EQ(k1.at(1, 0), f);
  }
}

TEST(InducedMap, Identity) {
  auto s = space({"a", "b", "c", "d"});
  auto [k0, k1] = induced_map(ProperCircleMap::identity(s));
  EXPECT_TRUE(k0.is_identity());
  EXPECT_TRUE(k1.is_identity());
}

TEST(InducedMap, DegreeOneK1EqualsK0) {
  ProperCircleMap m(space({"a", "b", "c"}), space({"u", "v"}), {{0, 1, 1}, {2, 0, 1}});
  auto [k0, k1] = induced_map(m);
  EXPECT_EQ(k0, k1);
}

TEST(ProperCircleMap, Validation) {
  EXPECT_THROW(ProperCircleMap(space({"a"}), space({"b"}), {{0, 0, 0}}), Error);
  EXPECT_THROW(ProperCircleMap(space({"a"}), space({"b"}), {{0, 1, 1}}), Error);
  EXPECT_THROW(ProperCircleMap(space({"a"}), space({"b", "c"}), {{0, 0, 1}, {0, 1, 1}}), Error);
}

ProperCircleMap random_map(std::mt19937_64& rng, const CircleSpace& src, const CircleSpace& tgt) {
  std::uniform_int_distribution<std::size_t> pick(0, tgt.size());  // tgt.size() means unmatched
  std::uniform_int_distribution<std::int64_t> deg(1, 4);
  std::vector<CircleMatch> ms;
  for (std::size_t s = 0; s < src.size(); ++s) {
    auto t = pick(rng);
    if (t < tgt.size()) ms.push_back({s, t, deg(rng)});
  }
  return {src, tgt, ms};
}

TEST(InducedMap, Functoriality) {
  std::mt19937_64 rng(67);
  auto a = space({"a0", "a1", "a2", "a3"});
  auto b = space({"b0", "b1", "b2"});
  auto c = space({"c0", "c1", "c2", "c3", "c4"});
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_map(rng, a, b);
    auto g = random_map(rng, b, c);
    auto gf = compose(f, g);
    auto [f0, f1] = induced_map(f);
    auto [g0, g1] = induced_map(g);
    auto [h0, h1] = induced_map(gf);
    EXPECT_EQ(h1, f1 * g1);
    // K^0 entries are 0/1 and only record whether a chain exists.
    EXPECT_EQ(h0, f0 * g0);
  }
}

TEST(SymmetricReduction, Examples) {
  EXPECT_EQ(reduce_symmetric_component(1, 2).degree, 2);
  auto r = reduce_symmetric_component(4, 3);
  EXPECT_EQ(r.degree, 3);
  EXPECT_EQ(r.circle.reduced_from_sym_power, 4);
  EXPECT_EQ(reduce_symmetric_component(2, 1).degree, 1);
  EXPECT_THROW(reduce_symmetric_component(0, 1), Error);
}

/// Winding of the loop t -> [e^{2 pi i t}, 1, ..., 1] in Sym^n(T) under the
/// coordinatewise f-th power, read through the product map. In turns, the
/// product angle of (f t, 0, ..., 0) is f t, so one lap winds f times; the
/// extra coordinates are sampled at distinct fixed angles to check that they
/// contribute nothing.
std::int64_t sym_loop_winding(int n, std::int64_t f, std::int64_t samples) {
  Rational total = 0;
  auto product_angle = [&](std::int64_t k) {
    Rational a = Rational(k * f, samples);
    for (int j = 1; j < n; ++j) a += Rational(j * f, n + 1);
    return a - Rational(floor(a));
  };
  for (std::int64_t k = 0; k < samples; ++k) {
    Rational step = product_angle(k + 1) - product_angle(k);
    if (step > Rational(1, 2)) step -= 1;
    if (step <= Rational(-1, 2)) step += 1;
    total += step;
  }
  return static_cast<std::int64_t>(numerator(total));
}

TEST(SymmetricReduction, PreservesDegreeAndRank) {
  for (int n = 1; n <= 6; ++n)
    for (std::int64_t f = 1; f <= 5; ++f) {
      auto r = reduce_symmetric_component(n, f);
      EXPECT_EQ(r.degree, sym_loop_winding(n, f, 8 * f));
      EXPECT_EQ(r.degree, circle_degree_oracle(f, 8 * f));
    }
  // Ranks before and after reducing the components of GL(4).
  auto q = extended_quotient(4);
  std::vector<CircleComponent> comps;
  for (std::size_t i = 0; i < q.components.size(); ++i) {
    const auto& c = q.components[i];
    auto r = reduce_symmetric_component(c.sym_powers().back(), 1, "comp" + std::to_string(i));
    comps.push_back(r.circle);
  }
  EXPECT_EQ(k_groups(CircleSpace(comps)).second.rank(), q.components.size());
}

TEST(CircleDegreeOracle, Examples) {
  EXPECT_EQ(circle_degree_oracle(1, 8), 1);
  EXPECT_EQ(circle_degree_oracle(2, 16), 2);
  EXPECT_EQ(circle_degree_oracle(5, 32), 5);
  for (std::int64_t f = 1; f <= 12; ++f) EXPECT_EQ(circle_degree_oracle(f, 8 * f), f);
  try {
    circle_degree_oracle(3, 11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientSamples);
  }
}

TEST(CircleMaps, Gl1Unramified) {
  auto ext = ExtensionData::unramified(LocalFieldData::make(3, 3), 3);
  auto bc = bc_gl1(ext, RamificationFiltration::unramified(), TemperedDualGL1(3, 2, 2));
  auto m = gl1_circle_map(bc);
  auto [k0, k1] = induced_map(m);
  EXPECT_EQ(k1.rows().size(), bc.source.circles().size());
  EXPECT_GT(k1.cols().size(), k1.rows().size());
  for (std::size_t r = 0; r < k1.rows().size(); ++r) {
    int nonzero = 0;
    for (std::size_t c = 0; c < k1.cols().size(); ++c)
      if (k1.at(r, c) != 0) {
        ++nonzero;
        EXPECT_EQ(k1.at(r, c), 3);
        EXPECT_EQ(k0.at(r, c), 1);
        EXPECT_EQ(k1.rows()[r].substr(2), k1.cols()[c].substr(2));
      }
    EXPECT_EQ(nonzero, 1);
  }
}

}  // namespace
}  // namespace basechange
