#include "plategoal/simd.hpp"

namespace plategoal::simd {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void xpay_scalar(const double* x, double a, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + a * y[i];
}

void spmv_scalar(std::size_t n, const int* row_ptr, const int* col, const double* val, const double* x,
                 double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) s += val[k] * x[col[k]];
    y[i] = s;
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{Isa::scalar, dot_scalar, axpy_scalar, xpay_scalar, spmv_scalar};
  return k;
}

}  // namespace plategoal::simd
