// AVX2 variants of the dense F_p row kernels. Only used for p < 2^15, so
// c*x + y fits a 32-bit lane and one Barrett correction step suffices.

#include "fplevel/rowops.hpp"

#if defined(FPLEVEL_HAVE_AVX2)

#include <immintrin.h>

namespace fplevel::rowops {

namespace {

// y mod p for y < 2^31 via q = (y * floor(2^32/p)) >> 32, then one
// conditional subtract. floor(y/p) - 1 <= q <= floor(y/p).
inline __m256i barrett_mod(__m256i y, __m256i vp, __m256i vm) {
  __m256i y_even = y;
  __m256i y_odd = _mm256_srli_epi64(y, 32);
  __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(y_even, vm), 32);
  __m256i q_odd = _mm256_srli_epi64(_mm256_mul_epu32(y_odd, vm), 32);
  __m256i qp_even = _mm256_mul_epu32(q_even, vp);
  __m256i qp_odd = _mm256_slli_epi64(_mm256_mul_epu32(q_odd, vp), 32);
  // products fit 32 bits per lane; recombine even/odd lanes
  __m256i qp = _mm256_blend_epi32(qp_even, qp_odd, 0xAA);
  __m256i r = _mm256_sub_epi32(y, qp);
  __m256i over = _mm256_sub_epi32(r, vp);
  // r in [0, 2p): keep r - p where it stayed non-negative
  __m256i mask = _mm256_cmpgt_epi32(_mm256_setzero_si256(), over);
  return _mm256_blendv_epi8(over, r, mask);
}

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
               std::size_t n) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>((1ull << 32) / p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    __m256i t = _mm256_add_epi32(y, _mm256_mullo_epi32(vc, x));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett_mod(t, vp, vm));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void scale_avx2(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>((1ull << 32) / p));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    __m256i t = _mm256_mullo_epi32(vc, x);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), barrett_mod(t, vp, vm));
  }
  for (; i < n; ++i)
    row[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * row[i] % p);
}

const Kernels kAvx2{axpy_avx2, scale_avx2, "avx2"};

bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

const Kernels* avx2() {
  static const Kernels* k = cpu_has_avx2() ? &kAvx2 : nullptr;
  return k;
}

}  // namespace fplevel::rowops

#endif  // FPLEVEL_HAVE_AVX2
