#include <atomic>
#include <cstdlib>
#include <cstring>

#include "sidon/kernels.hpp"

namespace sidon::kernels {

namespace {

constexpr int kUnset = -1;
std::atomic<int> forced{kUnset};

Isa detect() noexcept {
  const char* env = std::getenv("SIDON_ISA");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::scalar;
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool avx2_available() noexcept {
#if defined(SIDON_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() noexcept {
  int f = forced.load(std::memory_order_relaxed);
  if (f != kUnset) return static_cast<Isa>(f);
  static const Isa detected = detect();
  return detected;
}

void force_isa(Isa isa) noexcept {
  if (isa == Isa::avx2 && !avx2_available()) isa = Isa::scalar;
  forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() noexcept { forced.store(kUnset, std::memory_order_relaxed); }

void phase(std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
           const PhaseParams& params, std::span<std::uint32_t> out) {
#if defined(SIDON_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return phase_avx2(lo, hi, params, out);
#endif
  phase_scalar(lo, hi, params, out);
}

std::size_t count_members(std::span<const std::uint64_t> bitmap,
                          std::span<const std::uint32_t> indices) {
#if defined(SIDON_HAVE_AVX2)
  if (active_isa() == Isa::avx2) return count_members_avx2(bitmap, indices);
#endif
  return count_members_scalar(bitmap, indices);
}

}  // namespace sidon::kernels
