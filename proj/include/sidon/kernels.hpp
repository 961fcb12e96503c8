#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference version and,
// on x86-64 builds, an AVX2 version; dispatch picks one at runtime. The two
// must agree bit for bit (see tests/test_kernels.cpp).

#include <cstdint>
#include <span>
#include <string_view>

#include "sidon/integer.hpp"

namespace sidon::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;
bool avx2_available() noexcept;
/// Best available ISA, unless SIDON_ISA=scalar is set in the environment or
/// force_isa() was called.
Isa active_isa() noexcept;
void force_isa(Isa isa) noexcept;
void reset_isa() noexcept;

inline constexpr std::uint32_t kExcluded = 0xffffffffu;

/// Fixed-point phase map for theta = u / 2^128.
///
/// For a residue r = a mod 2^128, frac(a theta) = F / 2^128 with
/// F = r u mod 2^128. Then m F = phi 2^128 + R with phi = floor(a m theta) mod m
/// and frac(a m theta) = R / 2^128. An element is kept when R <= frac_limit.
struct PhaseParams {
  u128 theta_num = 0;
  std::uint32_t modulus = 1;
  u128 frac_limit = 0;

  /// frac < 1/k  <=>  k R < 2^128  <=>  R <= floor((2^128 - 1) / k)
  static PhaseParams for_order(u128 theta_num, std::uint32_t modulus, unsigned k) {
    return {theta_num, modulus, (~u128{0}) / k};
  }
};

/// out[i] = phi(a_i), or kExcluded when frac(a_i m theta) is not below 1/k.
/// Residues are split into lo/hi 64-bit words (structure of arrays).
void phase_scalar(std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                  const PhaseParams& params, std::span<std::uint32_t> out);
#if defined(SIDON_HAVE_AVX2)
void phase_avx2(std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                const PhaseParams& params, std::span<std::uint32_t> out);
#endif
void phase(std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
           const PhaseParams& params, std::span<std::uint32_t> out);

/// Number of indices whose bit is set in bitmap (64-bit words, LSB first).
std::size_t count_members_scalar(std::span<const std::uint64_t> bitmap,
                                 std::span<const std::uint32_t> indices);
#if defined(SIDON_HAVE_AVX2)
std::size_t count_members_avx2(std::span<const std::uint64_t> bitmap,
                               std::span<const std::uint32_t> indices);
#endif
std::size_t count_members(std::span<const std::uint64_t> bitmap,
                          std::span<const std::uint32_t> indices);

}  // namespace sidon::kernels
