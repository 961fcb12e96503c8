#include <gtest/gtest.h>

#include <cmath>

#include "sidon/error.hpp"
#include "sidon/oracle.hpp"
#include "support.hpp"

using namespace sidon;
using namespace sidon::testing;

TEST(Oracle, SevenConsecutiveHasFour) {
  const auto r = max_sidon(range(1, 7));
  EXPECT_EQ(r.optimum, 4u);
  EXPECT_TRUE(r.exhausted);
  EXPECT_EQ(r.witness.size(), 4u);
  EXPECT_TRUE(naive_sidon(r.witness));
}

TEST(Oracle, KnownGolombLengths) {
  // Largest Sidon subset of {0..L}: optimal rulers of length 6, 11, 17, 25.
  EXPECT_EQ(max_sidon(range(0, 6)).optimum, 4u);
  EXPECT_EQ(max_sidon(range(0, 11)).optimum, 5u);
  EXPECT_EQ(max_sidon(range(0, 17)).optimum, 6u);
  EXPECT_EQ(max_sidon(range(0, 25)).optimum, 7u);
  EXPECT_EQ(max_sidon(range(0, 24)).optimum, 6u);
}

TEST(Oracle, MatchesSubsetEnumeration) {
  RandomStream rng(61);
  for (int t = 0; t < 120; ++t) {
    const auto a = random_set(rng, 1 + rng.below(12), -40, 40);
    const unsigned g = 1 + static_cast<unsigned>(t % 3);
    const auto r = max_b2g(a, g);
    ASSERT_TRUE(r.exhausted);
    ASSERT_EQ(r.optimum, brute_max_b2g(a, g)) << "g = " << g;
    EXPECT_EQ(r.witness.size(), r.optimum);
    EXPECT_TRUE(naive_b2g(r.witness, g));
    for (const auto& w : r.witness) EXPECT_NE(std::find(a.begin(), a.end(), w), a.end());
  }
}

TEST(Oracle, IntervalsRespectLindstrom) {
  std::size_t prev = 0;
  for (long n = 1; n <= 22; ++n) {
    const auto r = max_sidon(range(1, n));
    ASSERT_TRUE(r.exhausted);
    EXPECT_GE(r.optimum, prev);
    const double bound = std::sqrt(n) + std::pow(n, 0.25) + 1;
    EXPECT_LT(static_cast<double>(r.optimum), bound) << n;
    prev = r.optimum;
  }
}

TEST(Oracle, BudgetExhaustionReportsLowerBound) {
  const auto r = max_sidon(range(1, 40), 50);
  EXPECT_FALSE(r.exhausted);
  EXPECT_LE(r.nodes_explored, 51u);
  EXPECT_GE(r.optimum, 1u);
  EXPECT_TRUE(naive_sidon(r.witness));
}

TEST(Oracle, DuplicatesAndLimits) {
  EXPECT_EQ(max_sidon(ints({3, 3, 3})).optimum, 1u);
  EXPECT_THROW(max_b2g(ints({1, 2}), 0), Error);
  const std::vector<Integer> huge = {Integer(1) << 70, Integer(5)};
  EXPECT_THROW(max_sidon(huge), Error);
  const std::vector<Integer> empty;
  EXPECT_EQ(max_sidon(empty).optimum, 0u);
}

TEST(Oracle, B2gIntervals) {
  // Every sum of {0,1,2,4} has at most two representations; {0..4} has a triple.
  EXPECT_EQ(max_b2g(range(0, 4), 2).optimum, 4u);
  EXPECT_EQ(max_b2g(range(0, 3), 2).optimum, 4u);
  EXPECT_EQ(brute_max_b2g(range(0, 9), 2), max_b2g(range(0, 9), 2).optimum);
}
