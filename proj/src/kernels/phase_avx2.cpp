// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "sidon/kernels.hpp"

namespace sidon::kernels {

namespace {

inline __m256i lo32(__m256i x, __m256i mask) { return _mm256_and_si256(x, mask); }
inline __m256i hi32(__m256i x) { return _mm256_srli_epi64(x, 32); }
inline __m256i splat(std::uint64_t v) { return _mm256_set1_epi64x(static_cast<long long>(v)); }

}  // namespace

// Four residues per iteration, one per 64-bit lane, with 32-bit limbs so that
// _mm256_mul_epu32 yields exact 64-bit partial products. Columns are summed
// with split lo/hi halves, which keeps every lane accumulator below 2^35.
void phase_avx2(std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                const PhaseParams& params, std::span<std::uint32_t> out) {
  const std::size_t n = lo.size();
  const std::size_t vec_end = n & ~std::size_t{3};

  const __m256i mask = splat(0xffffffffULL);
  const u128 u = params.theta_num;
  const __m256i u0 = splat(static_cast<std::uint32_t>(u));
  const __m256i u1 = splat(static_cast<std::uint32_t>(u >> 32));
  const __m256i u2 = splat(static_cast<std::uint32_t>(u >> 64));
  const __m256i u3 = splat(static_cast<std::uint32_t>(u >> 96));
  const __m256i mv = splat(params.modulus);
  const u128 lim = params.frac_limit;
  const __m256i l0 = splat(static_cast<std::uint32_t>(lim));
  const __m256i l1 = splat(static_cast<std::uint32_t>(lim >> 32));
  const __m256i l2 = splat(static_cast<std::uint32_t>(lim >> 64));
  const __m256i l3 = splat(static_cast<std::uint32_t>(lim >> 96));
  const __m256i excluded = _mm256_set1_epi32(-1);
  const __m256i pack = _mm256_setr_epi32(0, 2, 4, 6, 0, 2, 4, 6);

  for (std::size_t i = 0; i < vec_end; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo.data() + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi.data() + i));
    const __m256i r0 = lo32(x, mask);
    const __m256i r1 = hi32(x);
    const __m256i r2 = lo32(y, mask);
    const __m256i r3 = hi32(y);

    // F = r * u mod 2^128
    const __m256i p00 = _mm256_mul_epu32(r0, u0);
    const __m256i f0 = lo32(p00, mask);
    __m256i carry = hi32(p00);

    const __m256i p01 = _mm256_mul_epu32(r0, u1);
    const __m256i p10 = _mm256_mul_epu32(r1, u0);
    __m256i acc = _mm256_add_epi64(carry, _mm256_add_epi64(lo32(p01, mask), lo32(p10, mask)));
    const __m256i f1 = lo32(acc, mask);
    carry = _mm256_add_epi64(hi32(acc), _mm256_add_epi64(hi32(p01), hi32(p10)));

    const __m256i p02 = _mm256_mul_epu32(r0, u2);
    const __m256i p11 = _mm256_mul_epu32(r1, u1);
    const __m256i p20 = _mm256_mul_epu32(r2, u0);
    acc = _mm256_add_epi64(
        carry, _mm256_add_epi64(lo32(p02, mask),
                                _mm256_add_epi64(lo32(p11, mask), lo32(p20, mask))));
    const __m256i f2 = lo32(acc, mask);
    carry = _mm256_add_epi64(
        hi32(acc), _mm256_add_epi64(hi32(p02), _mm256_add_epi64(hi32(p11), hi32(p20))));

    // Top limb: only its low 32 bits survive, so wrapping 64-bit adds are fine.
    acc = _mm256_add_epi64(
        _mm256_add_epi64(carry, _mm256_mul_epu32(r0, u3)),
        _mm256_add_epi64(_mm256_add_epi64(_mm256_mul_epu32(r1, u2), _mm256_mul_epu32(r2, u1)),
                         _mm256_mul_epu32(r3, u0)));
    const __m256i f3 = lo32(acc, mask);

    // T = m * F; limbs t0..t3 are the fractional part, the top limb is phi.
    __m256i q = _mm256_mul_epu32(mv, f0);
    const __m256i t0 = lo32(q, mask);
    q = _mm256_add_epi64(_mm256_mul_epu32(mv, f1), hi32(q));
    const __m256i t1 = lo32(q, mask);
    q = _mm256_add_epi64(_mm256_mul_epu32(mv, f2), hi32(q));
    const __m256i t2 = lo32(q, mask);
    q = _mm256_add_epi64(_mm256_mul_epu32(mv, f3), hi32(q));
    const __m256i t3 = lo32(q, mask);
    const __m256i phi = hi32(q);

    // (t3, t2, t1, t0) <= (l3, l2, l1, l0); limbs are < 2^32 so signed
    // 64-bit compares are exact.
    __m256i keep = _mm256_or_si256(_mm256_cmpgt_epi64(l0, t0), _mm256_cmpeq_epi64(t0, l0));
    keep = _mm256_or_si256(_mm256_cmpgt_epi64(l1, t1),
                           _mm256_and_si256(_mm256_cmpeq_epi64(t1, l1), keep));
    keep = _mm256_or_si256(_mm256_cmpgt_epi64(l2, t2),
                           _mm256_and_si256(_mm256_cmpeq_epi64(t2, l2), keep));
    keep = _mm256_or_si256(_mm256_cmpgt_epi64(l3, t3),
                           _mm256_and_si256(_mm256_cmpeq_epi64(t3, l3), keep));

    const __m256i res = _mm256_blendv_epi8(excluded, phi, keep);
    const __m256i packed = _mm256_permutevar8x32_epi32(res, pack);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out.data() + i),
                     _mm256_castsi256_si128(packed));
  }

  if (vec_end < n) {
    phase_scalar(lo.subspan(vec_end), hi.subspan(vec_end), params, out.subspan(vec_end));
  }
}

}  // namespace sidon::kernels
