#pragma once

#include <cstddef>
#include <string_view>

namespace mk::simd {

/// Hot arithmetic inner loops used by the distance/affinity assembly and the
/// kernel-weighted sums. All kernels are column-oriented: they stream over the
/// sample index (which is large) rather than the coordinate index (which is
/// tiny, 1..9 in practice).
///
/// Scalar reference implementations always exist and are the ground truth;
/// wider variants are selected once at startup and must agree with the scalar
/// path within floating-point reassociation error (see tests/test_simd.cpp).
struct Ops {
  /// d2[i] += (s * (x[i] - q))^2 for i < m
  void (*sq_diff_accum)(double* d2, const double* x, double q, double s,
                        std::size_t m) noexcept;
  /// sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t m) noexcept;
  /// sum_i a[i]
  double (*sum)(const double* a, std::size_t m) noexcept;
  /// y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t m) noexcept;
};

const Ops& scalar_ops() noexcept;

/// AVX2+FMA variants; identical to scalar_ops() when not compiled in.
const Ops& avx2_ops() noexcept;

/// Runtime-dispatched table. Picks AVX2 when the CPU supports it, unless the
/// environment variable MK_SIMD forces "scalar" or "avx2".
const Ops& ops() noexcept;

/// Name of the dispatched instruction set: "avx2" or "scalar".
std::string_view active_isa() noexcept;

bool avx2_compiled() noexcept;

/// w[i] = exp(-d2[i] * f). The transcendental stays scalar on every path so
/// results do not depend on the dispatched ISA.
void exp_neg(const double* d2, double f, double* w, std::size_t m) noexcept;

}  // namespace mk::simd
