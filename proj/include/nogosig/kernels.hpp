#pragma once

#include <cstddef>

#include "nogosig/common.hpp"

// Complex double-precision vector kernels. Scalar reference implementations
// are the semantic ground truth; an AVX2+FMA variant is selected at runtime
// when the CPU supports it. The two are equivalence-tested against each
// other, so higher layers may use kern::active() without caring which one
// is live.
//
// All kernels operate on contiguous arrays of std::complex<double>, which
// is guaranteed to be layout-compatible with interleaved (re, im) doubles.

namespace nogosig::kern {

struct Kernels {
  const char* name;

  /// sum_i conj(a[i]) * b[i]
  cplx (*cdot)(std::size_t n, const cplx* a, const cplx* b);

  /// sum_i |a[i]|^2
  double (*norm_sq)(std::size_t n, const cplx* a);

  /// y[i] += alpha * x[i]
  void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);

  /// y[i] += alpha * conj(x[i])
  void (*axpy_conj)(std::size_t n, cplx alpha, const cplx* x, cplx* y);

  /// x[i] *= alpha
  void (*scal)(std::size_t n, cplx alpha, cplx* x);

  /// dst[i] = alpha * src[i]
  void (*scale_copy)(std::size_t n, cplx alpha, const cplx* src, cplx* dst);
};

const Kernels& scalar_kernels();

#if defined(NOGOSIG_HAVE_AVX2)
const Kernels& avx2_kernels();
#endif

/// True when the running CPU can execute the AVX2+FMA variant.
bool avx2_available();

/// The currently selected kernel set. Defaults to the best variant the
/// CPU supports; stable for the lifetime of the process unless overridden.
const Kernels& active();

/// Override the active kernel set (used by the equivalence tests).
/// Not safe to call concurrently with running kernels.
void select(const Kernels& k);

/// Restore automatic CPU-based selection.
void select_auto();

} // namespace nogosig::kern
