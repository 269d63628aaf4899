#include "mk/simd/ops.hpp"

#include <cmath>

namespace mk::simd {

namespace {

void sq_diff_accum_scalar(double* d2, const double* x, double q, double s,
                          std::size_t m) noexcept {
  for (std::size_t i = 0; i < m; ++i) {
    const double t = s * (x[i] - q);
    d2[i] += t * t;
  }
}

double dot_scalar(const double* a, const double* b, std::size_t m) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_scalar(const double* a, std::size_t m) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) acc += a[i];
  return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t m) noexcept {
  for (std::size_t i = 0; i < m; ++i) y[i] += a * x[i];
}

}  // namespace

const Ops& scalar_ops() noexcept {
  static const Ops table{sq_diff_accum_scalar, dot_scalar, sum_scalar,
                         axpy_scalar};
  return table;
}

void exp_neg(const double* d2, double f, double* w, std::size_t m) noexcept {
  for (std::size_t i = 0; i < m; ++i) w[i] = std::exp(-d2[i] * f);
}

}  // namespace mk::simd
