// AVX2 kernel set. This translation unit is compiled with -mavx2 and only
// ever executed after a runtime CPUID check (kern::available).

#if defined(__x86_64__)

#include <immintrin.h>

#include <cstddef>

#include "etdkf/kernels.hpp"

namespace etdkf::kern {

namespace {

// No FMA anywhere: each element sees exactly one mul and one add, the same
// roundings as the scalar reference.

void axpy_avx2(std::size_t n, double a, const double* x, double* y) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(yv, _mm256_mul_pd(av, xv)));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void scale_avx2(std::size_t n, double a, const double* x, double* y) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(y + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) y[i] = a * x[i];
}

double dot_avx2(std::size_t n, const double* x, const double* y) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    __m256d yv = _mm256_loadu_pd(y + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(xv, yv));
  }
  // Lane j holds stripe (i mod 4 == j); reduce as (s0+s2) + (s1+s3).
  __m128d lo = _mm256_castpd256_pd128(acc);                       // s0 s1
  __m128d hi = _mm256_extractf128_pd(acc, 1);                     // s2 s3
  __m128d pair = _mm_add_pd(lo, hi);                              // s0+s2, s1+s3
  double s = _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
  for (; i < n; ++i) s = s + x[i] * y[i];
  return s;
}

const Kernels kAvx2{"avx2", axpy_avx2, scale_avx2, dot_avx2};

}  // namespace

const Kernels* avx2_kernels() { return &kAvx2; }

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

}  // namespace etdkf::kern

#endif  // __x86_64__
