// Compiled with -mavx2; only reached through the runtime dispatch in kernels.cpp.
#include <immintrin.h>

#include "nfold/kernels.hpp"

namespace nfold::kernels::avx2 {

namespace {

// Barrett reduction of eight 32-bit values t < 2^32 modulo p < 2^16, with
// m = floor(2^32 / p). The estimate q = (t*m) >> 32 undershoots by at most 2,
// so two conditional subtractions finish the job.
inline __m256i reduce(__m256i t, __m256i vm, __m256i vp) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(t, vm), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(t, 32), vm);
  const __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
  // r < 3p < 2^18, so signed compares are safe.
  const __m256i pm1 = _mm256_sub_epi32(vp, _mm256_set1_epi32(1));
  r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, pm1), vp));
  r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, pm1), vp));
  return r;
}

inline std::uint32_t barrett_m(std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
}

}  // namespace

bool compiled() { return true; }

void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
          std::uint32_t p) {
  const std::size_t n = dst.size();
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(barrett_m(p)));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    // factor*src + dst <= (p-1)^2 + (p-1) < 2^32
    const __m256i t = _mm256_add_epi32(_mm256_mullo_epi32(s, vf), d);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), reduce(t, vm, vp));
  }
  if (i < n) scalar::axpy(dst.subspan(i), src.subspan(i), factor, p);
}

void scale(std::span<std::uint32_t> v, std::uint32_t factor, std::uint32_t p) {
  const std::size_t n = v.size();
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(barrett_m(p)));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v.data() + i),
                        reduce(_mm256_mullo_epi32(s, vf), vm, vp));
  }
  if (i < n) scalar::scale(v.subspan(i), factor, p);
}

}  // namespace nfold::kernels::avx2
