// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>

#include "sidon/kernels.hpp"

namespace sidon::kernels {

// Gathers 32-bit bitmap words (little-endian view of the 64-bit words).
std::size_t count_members_avx2(std::span<const std::uint64_t> bitmap,
                               std::span<const std::uint32_t> indices) {
  const auto* words = reinterpret_cast<const int*>(bitmap.data());
  const std::size_t n = indices.size();
  const std::size_t vec_end = n & ~std::size_t{7};
  const __m256i low5 = _mm256_set1_epi32(31);
  const __m256i one = _mm256_set1_epi32(1);

  std::size_t total = 0;
  std::size_t i = 0;
  while (i < vec_end) {
    // Flush before any 32-bit lane could overflow.
    const std::size_t block_end = std::min(vec_end, i + (std::size_t{1} << 30));
    __m256i acc = _mm256_setzero_si256();
    for (; i < block_end; i += 8) {
      const __m256i idx =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(indices.data() + i));
      const __m256i word = _mm256_i32gather_epi32(words, _mm256_srli_epi32(idx, 5), 4);
      const __m256i bit = _mm256_srlv_epi32(word, _mm256_and_si256(idx, low5));
      acc = _mm256_add_epi32(acc, _mm256_and_si256(bit, one));
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (std::uint32_t v : lanes) total += v;
  }
  return total + count_members_scalar(bitmap, indices.subspan(vec_end));
}

}  // namespace sidon::kernels
