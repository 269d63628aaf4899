// Compiled with -mavx2 -mfma when the toolchain supports it (see CMakeLists).
// Remainders are handled by short scalar tails; accumulators are split four
// ways so the reduction order is fixed and independent of m.

#include "mk/simd/ops.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace mk::simd {

namespace {

inline double hsum(__m256d v) noexcept {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void sq_diff_accum_avx2(double* d2, const double* x, double q, double s,
                        std::size_t m) noexcept {
  const __m256d vq = _mm256_set1_pd(q);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d t = _mm256_mul_pd(vs, _mm256_sub_pd(_mm256_loadu_pd(x + i), vq));
    const __m256d acc = _mm256_fmadd_pd(t, t, _mm256_loadu_pd(d2 + i));
    _mm256_storeu_pd(d2 + i, acc);
  }
  for (; i < m; ++i) {
    const double t = s * (x[i] - q);
    d2[i] += t * t;
  }
}

double dot_avx2(const double* a, const double* b, std::size_t m) noexcept {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= m; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= m; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double out = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < m; ++i) out += a[i] * b[i];
  return out;
}

double sum_avx2(const double* a, std::size_t m) noexcept {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= m; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(a + i + 4));
  }
  for (; i + 4 <= m; i += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
  }
  double out = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < m; ++i) out += a[i];
  return out;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t m) noexcept {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d acc = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, acc);
  }
  for (; i < m; ++i) y[i] += a * x[i];
}

}  // namespace

const Ops& avx2_ops() noexcept {
  static const Ops table{sq_diff_accum_avx2, dot_avx2, sum_avx2, axpy_avx2};
  return table;
}

bool avx2_compiled() noexcept { return true; }

}  // namespace mk::simd

#else

namespace mk::simd {

const Ops& avx2_ops() noexcept { return scalar_ops(); }

bool avx2_compiled() noexcept { return false; }

}  // namespace mk::simd

#endif
