#include "nogosig/kernels.hpp"

namespace nogosig::kern {

namespace {

cplx cdot_scalar(std::size_t n, const cplx* a, const cplx* b) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm_sq_scalar(std::size_t n, const cplx* a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return acc;
}

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] += alpha * x[i];
  }
}

void axpy_conj_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] += alpha * std::conj(x[i]);
  }
}

void scal_scalar(std::size_t n, cplx alpha, cplx* x) {
  for (std::size_t i = 0; i < n; ++i) {
    x[i] *= alpha;
  }
}

void scale_copy_scalar(std::size_t n, cplx alpha, const cplx* src, cplx* dst) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = alpha * src[i];
  }
}

} // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{
      "scalar",         cdot_scalar, norm_sq_scalar,
      axpy_scalar,      axpy_conj_scalar,
      scal_scalar,      scale_copy_scalar,
  };
  return k;
}

} // namespace nogosig::kern
