#include "sidon/kernels.hpp"

namespace sidon::kernels {

void phase_scalar(std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                  const PhaseParams& params, std::span<std::uint32_t> out) {
  const u128 u = params.theta_num;
  const u128 m = params.modulus;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const u128 r = (static_cast<u128>(hi[i]) << 64) | lo[i];
    const u128 f = r * u;  // wraps mod 2^128
    const u128 low = m * static_cast<std::uint64_t>(f);
    const u128 high = m * static_cast<std::uint64_t>(f >> 64);
    const u128 frac = low + (high << 64);
    const std::uint64_t carry = frac < low ? 1 : 0;
    const auto phi = static_cast<std::uint32_t>((high >> 64) + carry);
    out[i] = frac <= params.frac_limit ? phi : kExcluded;
  }
}

}  // namespace sidon::kernels
