#include <immintrin.h>

#include "plategoal/simd.hpp"

namespace plategoal::simd {

namespace {

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
    a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), a1);
  }
  for (; i + 4 <= n; i += 4) a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
  double s = hsum(_mm256_add_pd(a0, a1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void xpay_avx2(const double* x, double a, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) y[i] = x[i] + a * y[i];
}

void spmv_avx2(std::size_t n, const int* row_ptr, const int* col, const double* val, const double* x,
               double* y) {
  for (std::size_t r = 0; r < n; ++r) {
    int k = row_ptr[r];
    const int end = row_ptr[r + 1];
    __m256d acc = _mm256_setzero_pd();
    for (; k + 4 <= end; k += 4) {
      const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(col + k));
      const __m256d xv = _mm256_i32gather_pd(x, idx, 8);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(val + k), xv, acc);
    }
    double s = hsum(acc);
    for (; k < end; ++k) s += val[k] * x[col[k]];
    y[r] = s;
  }
}

}  // namespace

const Kernels& avx2_kernels_impl() {
  static const Kernels k{Isa::avx2, dot_avx2, axpy_avx2, xpay_avx2, spmv_avx2};
  return k;
}

}  // namespace plategoal::simd
