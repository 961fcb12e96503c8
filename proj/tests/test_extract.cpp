#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "sidon/error.hpp"
#include "sidon/extract.hpp"
#include "sidon/gfield.hpp"
#include "support.hpp"

using namespace sidon;
using namespace sidon::testing;

TEST(ChooseModulus, KnownValues) {
  struct Case { std::uint64_t n, g, p, m; };
  for (const auto& c : {Case{1'000'000, 1, 1733, 1733ull * 1733 + 1733 + 1},
                        Case{10'000, 1, 173, 30103}, Case{1, 1, 2, 7},
                        Case{2000, 1, 79, 6321}, Case{100'000, 4, 277, 308028}}) {
    const auto r = choose_modulus(c.n, 3, c.g);
    EXPECT_EQ(r.p, c.p) << c.n;
    EXPECT_EQ(r.m, c.m) << c.n;
    EXPECT_EQ(r.g, c.g);
  }
}

TEST(ChooseModulus, IsSmallestAdmissiblePrime) {
  for (std::uint64_t n = 1; n < 3000; n += 37) {
    for (std::uint64_t g : {1u, 2u, 5u}) {
      const Rational c(7, 2);
      const auto r = choose_modulus(n, c, g);
      const Rational target = c * Rational(static_cast<unsigned long>(n)) / Rational(static_cast<unsigned long>(g));
      auto norm = [](std::uint64_t p) { return Rational(static_cast<unsigned long>(p * p + p + 1)); };
      EXPECT_TRUE(gf::is_prime(r.p));
      EXPECT_GE(norm(r.p), target);
      for (std::uint64_t p = 2; p < r.p; ++p) {
        if (gf::is_prime(p)) {
          EXPECT_LT(norm(p), target) << n << " " << p;
        }
      }
    }
  }
}

TEST(ChooseModulus, RejectsBadParameters) {
  EXPECT_THROW(choose_modulus(0), Error);
  EXPECT_THROW(choose_modulus(10, 1), Error);
  EXPECT_THROW(choose_modulus(10, 3, 0), Error);
}

TEST(PigeonholeBlock, LargestIntersectionLowestIndex) {
  const std::vector<std::vector<std::uint64_t>> blocks = {{0, 1, 3}, {0, 2, 6}, {0, 4, 5}};
  const std::vector<std::uint64_t> image = {2, 4, 5, 6};
  const auto b = pigeonhole_block(blocks, image, 7);
  EXPECT_EQ(b.index, 1u);  // blocks 1 and 2 both meet it twice
  EXPECT_EQ(b.intersection, 2u);
  const std::vector<std::uint64_t> none;
  EXPECT_EQ(pigeonhole_block(blocks, none, 7).index, 0u);
}

TEST(PigeonholeBlock, MeetsAveragingBound) {
  RandomStream rng(31);
  const auto d = singer_difference_set(13);
  const auto cover = sidon_cover(d);
  for (int t = 0; t < 50; ++t) {
    std::set<std::uint64_t> img;
    const std::size_t size = 1 + rng.below(d.modulus);
    while (img.size() < size) img.insert(rng.below(d.modulus));
    const std::vector<std::uint64_t> image(img.begin(), img.end());
    const auto b = pigeonhole_block(cover.blocks, image, cover.modulus);
    EXPECT_GE(b.intersection * cover.blocks.size(), image.size());
    std::size_t naive = 0;
    for (auto x : cover.blocks[b.index]) naive += img.count(x);
    EXPECT_EQ(naive, b.intersection);
  }
}

TEST(Extract, IntervalGivesCertifiedSidonSubset) {
  const auto a = range(1, 10000);
  ExtractOptions opts;
  opts.trials = 50;
  const auto r = extract_sidon(a, opts, RandomStream(1));
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.certificate_kind(), "sidon");
  EXPECT_TRUE(naive_sidon(r.subset));
  EXPECT_TRUE(std::is_sorted(r.subset.begin(), r.subset.end()));
  EXPECT_GE(r.subset.size(), 19u);  // 0.19 sqrt(n)
  for (const auto& x : r.subset) EXPECT_TRUE(x >= 1 && x <= 10000);
}

TEST(Extract, ReportIsSelfConsistent) {
  RandomStream rng(32);
  const auto a = random_bits_set(rng, 5000, 60);
  ExtractOptions opts;
  opts.trials = 30;
  const auto r = extract_sidon(a, opts, RandomStream(2));
  EXPECT_EQ(r.n, 5000u);
  EXPECT_EQ(r.modulus.m, r.modulus.p * r.modulus.p + r.modulus.p + 1);
  EXPECT_EQ(r.block_count, r.modulus.p + 1);
  EXPECT_EQ(r.subset.size(), r.block.intersection);
  EXPECT_GE(r.block.intersection * r.block_count, r.kept);
  EXPECT_EQ(r.collisions_removed, r.b_size - r.kept);
  EXPECT_EQ(r.trials_used, 30u);
  EXPECT_DOUBLE_EQ(r.ratio, std::round(r.subset.size() / std::sqrt(5000.0) * 1e6) / 1e6);
}

TEST(Extract, B2gWithGOneEqualsSidon) {
  RandomStream rng(33);
  const auto a = random_set(rng, 3000, -1'000'000, 1'000'000);
  ExtractOptions opts;
  opts.trials = 25;
  const auto x = extract_sidon(a, opts, RandomStream(3));
  const auto y = extract_b2g(a, opts, RandomStream(3));
  EXPECT_EQ(x.subset, y.subset);
  EXPECT_EQ(x.theta, y.theta);
}

TEST(Extract, B2gSubsetsHonourG) {
  const auto a = range(0, 19999);
  for (unsigned g : {2u, 3u}) {
    ExtractOptions opts;
    opts.g = g;
    opts.trials = 25;
    const auto r = extract_b2g(a, opts, RandomStream(g));
    EXPECT_EQ(r.certificate_kind(), "b2g(" + std::to_string(g) + ")");
    EXPECT_EQ(r.modulus.m, g * (r.modulus.p * r.modulus.p + r.modulus.p + 1));
    EXPECT_TRUE(naive_b2g(r.subset, g));
    EXPECT_GT(r.subset.size(), 0u);
  }
}

TEST(Extract, TinyAndDuplicatedInputs) {
  ExtractOptions opts;
  opts.trials = 10;
  const auto one = extract_sidon(ints({5}), opts, RandomStream(4));
  EXPECT_LE(one.subset.size(), 1u);
  const auto dup = extract_sidon(ints({3, 1, 2, 1, 3}), opts, RandomStream(4));
  EXPECT_EQ(dup.n, 3u);
  EXPECT_EQ(dup.dedup_removed, 2u);
  EXPECT_TRUE(naive_sidon(dup.subset));
  const std::vector<Integer> empty;
  EXPECT_THROW(extract_sidon(empty, opts, RandomStream(4)), Error);
}

TEST(Extract, SameSeedSameOutputAcrossThreads) {
  RandomStream rng(34);
  const auto a = random_bits_set(rng, 4000, 60);
  ExtractOptions opts;
  opts.trials = 20;
  opts.threads = 1;
  const auto x = extract_sidon(a, opts, RandomStream(5));
  opts.threads = 8;
  const auto y = extract_sidon(a, opts, RandomStream(5));
  EXPECT_EQ(x.subset, y.subset);
  EXPECT_EQ(x.block.index, y.block.index);
}

TEST(RoundedRatio, SixPlaces) {
  EXPECT_DOUBLE_EQ(rounded_ratio(190, 1'000'000), 0.19);
  EXPECT_DOUBLE_EQ(rounded_ratio(1, 3), 0.57735);
  EXPECT_DOUBLE_EQ(rounded_ratio(0, 0), 0.0);
}
