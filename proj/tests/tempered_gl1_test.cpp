#include <gtest/gtest.h>

#include <random>

#include "basechange/tempered_gl1.hpp"
#include "test_support.hpp"

namespace basechange {
namespace {

using Z = GaussianRational;

const auto kQ5 = LocalFieldData::make(5, 5);
const auto kQ3 = LocalFieldData::make(3, 3);

TEST(IncludeWeil, Examples) {
  EXPECT_EQ(include_weil({1, FieldSide::E}, 3), (FormalWeilDegree{3, FieldSide::F}));
  EXPECT_EQ(include_weil({0, FieldSide::E}, 7).m, 0);
  EXPECT_EQ(include_weil({-2, FieldSide::E}, 2).m, -4);
  EXPECT_THROW(include_weil({1, FieldSide::F}, 2), Error);
}

TEST(UnramifiedQuasichar, Examples) {
  EXPECT_EQ(bc_unramified_quasichar(UnramifiedQuasicharacter(Z::i()), 2).parameter(), Z(-1));
  EXPECT_EQ(bc_unramified_quasichar(UnramifiedQuasicharacter(Z(2)), 1).parameter(), Z(2));
  EXPECT_THROW(UnramifiedQuasicharacter(Z(0)), Error);
}

TEST(UnramifiedQuasichar, EvaluationCoherenceOnePlusI) {
  UnramifiedQuasicharacter chi(Z(1, 1));
  auto bc = bc_unramified_quasichar(chi, 2);
  const auto lhs = bc({3, FieldSide::E});
  const auto rhs = chi(include_weil({3, FieldSide::E}, 2));
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs, testing::naive_pow(Z(1, 1), 6));
  EXPECT_EQ(lhs, Z(0, -8));
}

TEST(UnramifiedQuasichar, RandomCoherenceAndTowers) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::int64_t> fd(1, 5), md(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    auto z = testing::random_gaussian(rng);
    const auto f = fd(rng), g = fd(rng), m = md(rng);
    UnramifiedQuasicharacter chi(z);
    auto bc = bc_unramified_quasichar(chi, f);
    EXPECT_EQ(bc({m, FieldSide::E}), testing::naive_pow(z, f * m));
    EXPECT_EQ(bc_unramified_quasichar(bc, g), bc_unramified_quasichar(chi, f * g));
    if (chi.tempered()) { EXPECT_TRUE(bc.tempered()); }
  }
}

TEST(CharacterCounts, PartialSumsAreUnitQuotientOrders) {
  for (std::int64_t q : {2, 3, 4, 5, 7, 9}) {
    BigInt sum = 0;
    for (std::int64_t c = 0; c <= 5; ++c) {
      sum += characters_with_conductor(q, c);
      if (c >= 1) { EXPECT_EQ(sum, unit_quotient_order(q, c)) << "q=" << q << " c=" << c; }
    }
  }
}

TEST(TemperedDual, TruncationAndLabels) {
  TemperedDualGL1 dual(5, 2);
  // 1 + 3 + 16
  EXPECT_EQ(dual.circles().size(), 20u);
  EXPECT_EQ(dual.circles().front().name(), "c0.j0");
  EXPECT_TRUE(dual.contains({2, 15}));
  EXPECT_FALSE(dual.contains({2, 16}));
  EXPECT_EQ(TemperedDualGL1(5, 3, 2).circles().size(), 7u);
  EXPECT_THROW(TemperedDualGL1(5, 1, std::vector<CharacterLabel>{{1, 3}}), Error);
  EXPECT_THROW(TemperedDualGL1(7, 8), Error);  // too many circles
}

TEST(BcGl1, Examples) {
  auto unram = ExtensionData::make(kQ5, 1, 2);
  auto bc = bc_gl1(unram, RamificationFiltration::unramified(), TemperedDualGL1(5, 2, 2));
  for (const auto& p : bc.pairs) {
    EXPECT_EQ(p.to.conductor, p.from.conductor);
    EXPECT_EQ(p.degree, 2);
    if (p.from == CharacterLabel{1, 0}) { EXPECT_EQ(p.to, (CharacterLabel{1, 0})); }
  }

  auto tame = ExtensionData::make(kQ3, 2, 1);
  auto bt = bc_gl1(tame, RamificationFiltration::tame(2), TemperedDualGL1(3, 2, 1));
  for (const auto& p : bt.pairs) {
    EXPECT_EQ(p.degree, 1);
    if (p.from == CharacterLabel{1, 0}) { EXPECT_EQ(p.to, (CharacterLabel{2, 0})); }
    if (p.from == CharacterLabel{0, 0}) { EXPECT_EQ(p.to, (CharacterLabel{0, 0})); }
  }
  EXPECT_EQ(bt.conductor_map.at(2), 4);
  EXPECT_EQ(bt.target.bound(), 4);
}

TEST(BcGl1, ConductorMapIsPsi) {
  std::mt19937_64 rng(59);
  for (std::int64_t e : {1, 2, 4}) {
    auto ext = ExtensionData::make(kQ5, e, 1 + e % 3);
    auto filt = RamificationFiltration::tame(e);
    auto bc = bc_gl1(ext, filt, TemperedDualGL1(5, 3, 3));
    for (const auto& p : bc.pairs) {
      EXPECT_EQ(p.to.conductor, conductor_transport(filt, p.from.conductor));
      EXPECT_TRUE(bc.target.contains(p.to));
    }
    // Distinct sources go to distinct targets by default.
    std::set<CharacterLabel> targets;
    for (const auto& p : bc.pairs) targets.insert(p.to);
    EXPECT_EQ(targets.size(), bc.pairs.size());
  }
}

TEST(BcGl1, WildScope) {
  auto wild = ExtensionData::make(kQ3, 3, 1);
  auto filt = RamificationFiltration::cyclic_prime(3, 1);
  auto bc = bc_gl1(wild, filt, TemperedDualGL1(3, 2));
  EXPECT_EQ(bc.conductor_map.at(2), 4);

  auto mixed_wild = ExtensionData::make(kQ3, 3, 2);
  try {
    bc_gl1(mixed_wild, filt, TemperedDualGL1(3, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedExtension);
  }
  EXPECT_THROW(bc_gl1(ExtensionData::make(kQ3, 3, 1, true, false), filt, TemperedDualGL1(3, 2)), Error);
}

TEST(BcGl1, Collisions) {
  auto unram = ExtensionData::make(kQ5, 1, 2);
  std::map<CharacterLabel, CharacterLabel> coll{{{1, 1}, {1, 0}}};
  auto bc = bc_gl1(unram, RamificationFiltration::unramified(), TemperedDualGL1(5, 1), coll);
  int hits = 0;
  for (const auto& p : bc.pairs) hits += p.to == CharacterLabel{1, 0};
  EXPECT_EQ(hits, 2);
  std::map<CharacterLabel, CharacterLabel> bad{{{1, 1}, {0, 0}}};
  EXPECT_THROW(bc_gl1(unram, RamificationFiltration::unramified(), TemperedDualGL1(5, 1), bad), Error);
}

TEST(BcGl1, RejectsForeignDual) {
  EXPECT_THROW(bc_gl1(ExtensionData::make(kQ5, 1, 2), RamificationFiltration::unramified(), TemperedDualGL1(3, 1)),
               Error);
}

/// Preimage of [s, e] under doubling, by halving angles: z^2 lands in the
/// arc iff its angle is in [s/2, e/2] or [(s+1)/2, (e+1)/2].
std::vector<TurnArc> halving_oracle(const TurnArc& a) {
  return {{a.start / 2, a.end / 2}, {(a.start + 1) / 2, (a.end + 1) / 2}};
}

TEST(ProperPreimage, Examples) {
  TurnArc quarter{0, Rational(1, 4)};
  EXPECT_EQ(properness_check(1, quarter), std::vector<TurnArc>{quarter});
  auto half = properness_check(2, {0, Rational(1, 2)});
  EXPECT_EQ(half, (std::vector<TurnArc>{{0, Rational(1, 4)}, {Rational(1, 2), Rational(3, 4)}}));
  EXPECT_EQ(properness_check(3, {0, 1}), (std::vector<TurnArc>{{0, 1}}));
  EXPECT_THROW(properness_check(0, quarter), Error);
}

TEST(ProperPreimage, HalvingOracleAndLength) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    Rational a = testing::random_rational(rng, 10, 11) / 11, b = testing::random_rational(rng, 10, 11) / 11;
    if (a > b) std::swap(a, b);
    if (b > 1) b = 1;
    if (a == 0 && b == 1) continue;
    TurnArc arc{a, b};
    EXPECT_EQ(properness_check(2, arc), halving_oracle(arc));
    for (std::int64_t f = 1; f <= 6; ++f) {
      Rational total = 0;
      for (const auto& piece : properness_check(f, arc)) total += piece.length();
      EXPECT_EQ(total, arc.length());
    }
  }
}

}  // namespace
}  // namespace basechange
