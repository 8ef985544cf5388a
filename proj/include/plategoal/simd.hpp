#pragma once

#include <cstddef>

namespace plategoal::simd {

enum class Isa { scalar, avx2 };

/// Dense vector and CSR kernels used by the iterative solvers and residual checks.
struct Kernels {
  Isa isa;
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// y += a x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  /// y = x + a y
  void (*xpay)(const double* x, double a, double* y, std::size_t n);
  /// y = A x for a CSR matrix with n rows.
  void (*spmv)(std::size_t n, const int* row_ptr, const int* col, const double* val, const double* x,
               double* y);
};

const Kernels& scalar_kernels();
/// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2/FMA.
const Kernels* avx2_kernels();

/// Best available kernels. PLATEGOAL_SIMD=scalar in the environment forces the reference path.
const Kernels& active();
const char* isa_name(Isa isa);

}  // namespace plategoal::simd
