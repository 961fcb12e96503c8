#include <gtest/gtest.h>

#include <cstdlib>

#include "sidon/kernels.hpp"
#include "sidon/random.hpp"
#include "sidon/theta.hpp"

using namespace sidon;
using namespace sidon::kernels;

namespace {

struct Residues {
  std::vector<Integer> values;
  std::vector<std::uint64_t> lo, hi;
};

Residues make_residues(RandomStream& rng, std::size_t n) {
  Residues r;
  for (std::size_t i = 0; i < n; ++i) {
    // Mix magnitudes and signs, plus edge values near 0 and 2^128.
    Integer v;
    switch (i % 5) {
      case 0: v = rng.bits(60); break;
      case 1: v = -rng.bits(90); break;
      case 2: v = rng.bits(200); break;
      case 3: v = Integer(static_cast<unsigned long>(i)); break;
      default: v = (Integer(1) << 128) - Integer(static_cast<unsigned long>(i)); break;
    }
    r.values.push_back(v);
    const u128 res = residue_mod_2_128(v);
    r.lo.push_back(static_cast<std::uint64_t>(res));
    r.hi.push_back(static_cast<std::uint64_t>(res >> 64));
  }
  return r;
}

// Reference: exact rational arithmetic.
std::vector<std::uint32_t> reference_phase(const Residues& r, u128 u, std::uint32_t m,
                                           unsigned k) {
  const Theta theta = Theta::dyadic(u);
  std::vector<std::uint32_t> out;
  for (const Integer& a : r.values) {
    out.push_back(below_fraction(theta, m, a, k)
                      ? static_cast<std::uint32_t>(phi_apply(theta, m, a))
                      : kExcluded);
  }
  return out;
}

}  // namespace

TEST(Kernels, IsaNames) {
  EXPECT_EQ(isa_name(Isa::scalar), "scalar");
  EXPECT_EQ(isa_name(Isa::avx2), "avx2");
}

TEST(Kernels, ForceAndResetIsa) {
  force_isa(Isa::scalar);
  EXPECT_EQ(active_isa(), Isa::scalar);
  reset_isa();
  EXPECT_EQ(active_isa() == Isa::avx2, avx2_available() && std::getenv("SIDON_ISA") == nullptr);
}

TEST(PhaseKernel, ScalarMatchesExactArithmetic) {
  RandomStream rng(1);
  const auto r = make_residues(rng, 1003);
  for (std::uint32_t m : {2u, 7u, 6321u, 3005023u, 4294967295u}) {
    for (unsigned k : {2u, 3u, 5u}) {
      const u128 u = rng.next_u128();
      std::vector<std::uint32_t> out(r.values.size());
      phase_scalar(r.lo, r.hi, PhaseParams::for_order(u, m, k), out);
      ASSERT_EQ(out, reference_phase(r, u, m, k)) << m << " " << k;
    }
  }
}

TEST(PhaseKernel, ThetaEdgeValues) {
  RandomStream rng(2);
  const auto r = make_residues(rng, 257);
  for (u128 u : {u128{0}, u128{1}, ~u128{0}, u128{1} << 127, (u128{1} << 127) - 1}) {
    std::vector<std::uint32_t> out(r.values.size());
    phase_scalar(r.lo, r.hi, PhaseParams::for_order(u, 6321, 2), out);
    ASSERT_EQ(out, reference_phase(r, u, 6321, 2));
  }
}

#if defined(SIDON_HAVE_AVX2)
TEST(PhaseKernel, Avx2MatchesScalar) {
  if (!avx2_available()) GTEST_SKIP() << "no AVX2 on this host";
  RandomStream rng(3);
  // Sizes straddle the vector width so the scalar tail is exercised.
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 64u, 1001u, 4099u}) {
    const auto r = make_residues(rng, n);
    for (int rep = 0; rep < 6; ++rep) {
      const std::uint32_t m = rep == 5 ? 0xfffffffeu : 2 + static_cast<std::uint32_t>(rng.below(5'000'000));
      const unsigned k = 2 + static_cast<unsigned>(rng.below(4));
      const auto params = PhaseParams::for_order(rng.next_u128(), m, k);
      std::vector<std::uint32_t> a(n), b(n);
      phase_scalar(r.lo, r.hi, params, a);
      phase_avx2(r.lo, r.hi, params, b);
      ASSERT_EQ(a, b) << "n = " << n << " m = " << m;
    }
  }
}

TEST(PhaseKernel, Avx2ExtremeLimbs) {
  if (!avx2_available()) GTEST_SKIP();
  // All-ones and all-zero limbs stress the carry chain.
  std::vector<std::uint64_t> lo = {~0ull, 0, ~0ull, 0, 1, ~0ull, 0x8000000000000000ull, 0x7fffffffffffffffull};
  std::vector<std::uint64_t> hi = {~0ull, 0, 0, ~0ull, ~0ull, 1, 0x8000000000000000ull, 0xffffffff00000000ull};
  for (u128 u : {~u128{0}, u128{1}, (u128{0xffffffffull} << 96) | 0xffffffffull}) {
    for (std::uint32_t m : {2u, 0xffffffffu, 65537u}) {
      const auto params = PhaseParams::for_order(u, m, 2);
      std::vector<std::uint32_t> a(lo.size()), b(lo.size());
      phase_scalar(lo, hi, params, a);
      phase_avx2(lo, hi, params, b);
      ASSERT_EQ(a, b);
    }
  }
}
#endif

TEST(MembersKernel, ScalarCountsBits) {
  RandomStream rng(4);
  const std::uint32_t m = 10007;
  std::vector<std::uint64_t> bitmap((m + 63) / 64, 0);
  std::vector<bool> naive(m, false);
  for (int i = 0; i < 3000; ++i) {
    const auto x = static_cast<std::uint32_t>(rng.below(m));
    bitmap[x >> 6] |= 1ull << (x & 63);
    naive[x] = true;
  }
  std::vector<std::uint32_t> idx;
  std::size_t expect = 0;
  for (int i = 0; i < 777; ++i) {
    const auto x = static_cast<std::uint32_t>(rng.below(m));
    idx.push_back(x);
    expect += naive[x];
  }
  EXPECT_EQ(count_members_scalar(bitmap, idx), expect);
  EXPECT_EQ(count_members(bitmap, idx), expect);
}

#if defined(SIDON_HAVE_AVX2)
TEST(MembersKernel, Avx2MatchesScalar) {
  if (!avx2_available()) GTEST_SKIP();
  RandomStream rng(5);
  for (std::uint32_t m : {1u, 63u, 64u, 65u, 1000u, 308028u}) {
    std::vector<std::uint64_t> bitmap((m + 63) / 64, 0);
    for (std::uint32_t i = 0; i < m / 3 + 1; ++i) {
      const auto x = static_cast<std::uint32_t>(rng.below(m));
      bitmap[x >> 6] |= 1ull << (x & 63);
    }
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 100u, 1234u}) {
      std::vector<std::uint32_t> idx(n);
      for (auto& x : idx) x = static_cast<std::uint32_t>(rng.below(m));
      ASSERT_EQ(count_members_avx2(bitmap, idx), count_members_scalar(bitmap, idx));
    }
  }
}
#endif
