#include <random>

#include <gtest/gtest.h>

#include "ehrhart/box_group.hpp"
#include "ehrhart/constraints.hpp"
#include "support/oracles.hpp"

namespace ehrhart {
namespace {

ExponentList exps(IntVector v, std::size_t d) { return ExponentList(std::move(v), d); }

TEST(Exponents, Examples) {
  EXPECT_EQ(exponents(DeltaVector({1, 0, 4, 0})), exps({2, 2, 2, 2}, 3));
  EXPECT_EQ(exponents(DeltaVector({1, 1, 0, 2, 0, 0})), exps({1, 3, 3}, 5));
  EXPECT_EQ(exponents(DeltaVector({1, 0, 2, 0, 1, 1, 0, 2, 0})), exps({2, 2, 4, 5, 7, 7}, 8));
}

TEST(Exponents, RejectsInvalidDelta) {
  EXPECT_THROW(DeltaVector({2, 1}), InvalidArgument);
  EXPECT_THROW(DeltaVector({1, -1}), InvalidArgument);
  EXPECT_THROW(exps({3, 1}, 4), InvalidArgument);
  EXPECT_THROW(exps({1, 5}, 4), InvalidArgument);
}

TEST(Exponents, RoundTripIsIdentity) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 1000; ++trial) {
    const DeltaVector v = testing::random_delta(rng, 1 + trial % 12, 1 + trial % 9);
    const ExponentList e = exponents(v);
    EXPECT_EQ(to_delta(e), v);
    EXPECT_EQ(exponents(to_delta(e)), e);
  }
}

TEST(CheckPairing, Examples) {
  EXPECT_TRUE(check_pairing(exps({2, 2, 2, 2}, 3)).passed());
  EXPECT_TRUE(check_pairing(exps({2, 2, 4, 5, 7, 7}, 8)).passed());
  const auto bad = check_pairing(exps({1, 2, 2, 4}, 4));
  EXPECT_FALSE(bad.passed());
  EXPECT_EQ(bad.checks[0].pairs, (std::vector<IndexPair>{{2, 3}}));
  // Constant sums exceeding d + 1.
  EXPECT_FALSE(check_pairing(exps({2, 2, 2, 2}, 2)).passed());
}

TEST(CheckPairing, RequiresOddPrimeVolume) {
  EXPECT_THROW(check_pairing(exps({1, 3, 3}, 5)), InvalidArgument);
  EXPECT_THROW(check_pairing(exps({1}, 1)), InvalidArgument);
}

TEST(CheckSuperadditive, Examples) {
  EXPECT_TRUE(check_superadditive(exps({1, 2, 3, 4}, 4)).passed());
  EXPECT_TRUE(check_superadditive(exps({2, 2, 2, 2}, 3)).passed());
  const auto r = check_superadditive(exps({2, 2, 4, 5, 7, 7}, 8));
  EXPECT_FALSE(r.passed());
  const auto& pairs = r.checks[0].pairs;
  EXPECT_NE(std::find(pairs.begin(), pairs.end(), IndexPair{2, 2}), pairs.end());
  EXPECT_THROW(check_superadditive(exps({1, 1, 1}, 2)), InvalidArgument);
}

TEST(ReducedPairs, Examples) {
  EXPECT_EQ(reduced_pairs(5), (std::vector<IndexPair>{{1, 1}, {1, 2}}));
  EXPECT_EQ(reduced_pairs(7), (std::vector<IndexPair>{{1, 1}, {1, 2}, {1, 3}, {2, 2}}));
  EXPECT_TRUE(reduced_pairs(3).empty());
}

TEST(CheckStanley, Examples) {
  EXPECT_TRUE(check_stanley(DeltaVector({1, 4, 0})).passed());
  EXPECT_TRUE(check_stanley(DeltaVector({1, 0, 4, 0})).passed());
  EXPECT_TRUE(check_stanley(DeltaVector({1, 3, 1})).passed());
  EXPECT_TRUE(check_stanley(DeltaVector({1, 3, 0, 0})).passed());  // s = 1
  const auto r = check_stanley(DeltaVector({1, 2, 0, 1}));          // i = 1: 3 > 1
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.checks[0].positions, (IntVector{1}));
}

TEST(CheckHibi, Examples) {
  EXPECT_TRUE(check_hibi(DeltaVector({1, 0, 4, 0})).passed());
  EXPECT_TRUE(check_hibi(DeltaVector({1, 4, 0})).passed());
  const auto r = check_hibi(DeltaVector({1, 0, 0, 1}));
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.checks[0].positions, (IntVector{0, 1}));  // i = 1: 1 + 0 > 0 + 0
  EXPECT_TRUE(check_hibi(DeltaVector({1})).passed());
}

TEST(ExponentCriteria, Examples) {
  const auto ce = exps({2, 2, 4, 5, 7, 7}, 8);
  EXPECT_TRUE(prop12_lhs_a(ce).passed());
  EXPECT_TRUE(prop12_lhs_b(ce).passed());
  const auto e = exps({1, 3, 3}, 5);
  EXPECT_TRUE(prop12_lhs_a(e).passed());
  EXPECT_TRUE(prop12_lhs_b(e).passed());
  for (Int m = 2; m <= 10; ++m) {
    IntVector additive;
    for (Int j = 1; j < m; ++j) additive.push_back(j);
    const auto a = exps(additive, static_cast<std::size_t>(m - 1));
    EXPECT_TRUE(prop12_lhs_a(a).passed());
    EXPECT_TRUE(prop12_lhs_b(a).passed());
  }
}

TEST(CheckNonprime, Examples) {
  EXPECT_TRUE(check_nonprime(exps({1, 3, 3}, 5)).passed());  // m = 4: empty range
  // m = 9, g = 3: single pair (1,1), i.e. 2 i_1 >= i_2.
  EXPECT_TRUE(check_nonprime(exps({1, 2, 3, 3, 3, 3, 3, 3}, 3)).passed());
  const auto r = check_nonprime(exps({1, 3, 3, 3, 3, 3, 3, 3}, 3));
  EXPECT_EQ(r.checks[0].pairs, (std::vector<IndexPair>{{1, 1}}));
  EXPECT_TRUE(check_nonprime(exps({1, 3, 3, 5, 5}, 7)).passed());
  EXPECT_THROW(check_nonprime(exps({1, 1, 1, 1}, 2)), InvalidArgument);
}

TEST(CheckAll, SelectsApplicableChecks) {
  const auto prime = check_all(DeltaVector({1, 0, 4, 0}));
  EXPECT_NE(prime.find("pairing"), nullptr);
  EXPECT_EQ(prime.find("nonprime"), nullptr);
  const auto composite = check_all(DeltaVector({1, 1, 0, 2, 0, 0}));
  EXPECT_EQ(composite.find("pairing"), nullptr);
  EXPECT_NE(composite.find("nonprime"), nullptr);
}

TEST(ExponentCriteria, EquivalencesOnRandomVectors) {
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<Int> md(2, 12);
  std::uniform_int_distribution<std::size_t> dd(1, 12);
  for (int trial = 0; trial < 10000; ++trial) {
    const DeltaVector v = testing::random_delta(rng, md(rng), dd(rng));
    const ExponentList e = exponents(v);
    EXPECT_EQ(prop12_lhs_a(e).passed(), check_stanley(v).passed()) << v;
    EXPECT_EQ(prop12_lhs_b(e).passed(), check_hibi(v).passed()) << v;
  }
}

TEST(ReducedPairs, EquivalentToFullCheckUnderPairing) {
  std::mt19937_64 rng(53);
  int tested = 0;
  for (int trial = 0; trial < 200000 && tested < 2000; ++trial) {
    const Int p = std::array<Int, 5>{5, 7, 11, 13, 17}[trial % 5];
    const DeltaVector v = testing::random_delta(rng, p, 2 + trial % 9);
    const ExponentList e = exponents(v);
    if (!check_pairing(e).passed()) continue;
    ++tested;
    EXPECT_EQ(check_superadditive(e).passed(), check_superadditive_reduced(e).passed()) << v;
  }
  EXPECT_GE(tested, 500);
}

TEST(Soundness, BoxDeltasOfPrimeVolumeSimplicesPassPrimeChecks) {
  std::mt19937_64 rng(54);
  int seen = 0;
  while (seen < 150) {
    const Simplex s = testing::random_simplex(rng, 2 + seen % 4, -4, 4, 30);
    if (s.volume() < 3 || !is_prime(s.volume())) continue;
    ++seen;
    const ExponentList e = exponents(delta_from_box(s));
    EXPECT_TRUE(check_pairing(e).passed());
    EXPECT_TRUE(check_superadditive(e).passed());
  }
}

}  // namespace
}  // namespace ehrhart
