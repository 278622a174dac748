// AVX2+FMA kernel variants. Compiled with -mavx2 -mfma in its own
// translation unit; only dispatched to after a runtime CPU check.
//
// Layout: std::complex<double> arrays are interleaved (re, im) doubles,
// so one __m256d holds two complex values. The swap/addsub idiom gives
// the complex product:
//   alpha*x = addsub(x * re(alpha), swap(x) * im(alpha))

#include "nogosig/kernels.hpp"

#if defined(NOGOSIG_HAVE_AVX2)

#include <immintrin.h>

namespace nogosig::kern {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Sign mask that conjugates both complex values in a vector.
inline __m256d conj_mask() {
  return _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
}

cplx cdot_avx2(std::size_t n, const cplx* a, const cplx* b) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    __m256d t = _mm256_mul_pd(_mm256_permute_pd(va, 0x5), vb);
    acc_im = _mm256_add_pd(acc_im, _mm256_addsub_pd(zero, t));
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double norm_sq_avx2(std::size_t n, const cplx* a) {
  const double* pa = reinterpret_cast<const double*>(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    acc = _mm256_fmadd_pd(va, va, acc);
  }
  double out = hsum(acc);
  for (; i < n; ++i) {
    out += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return out;
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d prod = _mm256_addsub_pd(
        _mm256_mul_pd(vx, are),
        _mm256_mul_pd(_mm256_permute_pd(vx, 0x5), aim));
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(vy, prod));
  }
  for (; i < n; ++i) {
    y[i] += alpha * x[i];
  }
}

void axpy_conj_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  const __m256d cmask = conj_mask();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_xor_pd(_mm256_loadu_pd(px + 2 * i), cmask);
    __m256d prod = _mm256_addsub_pd(
        _mm256_mul_pd(vx, are),
        _mm256_mul_pd(_mm256_permute_pd(vx, 0x5), aim));
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(vy, prod));
  }
  for (; i < n; ++i) {
    y[i] += alpha * std::conj(x[i]);
  }
}

void scal_avx2(std::size_t n, cplx alpha, cplx* x) {
  double* px = reinterpret_cast<double*>(x);
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d prod = _mm256_addsub_pd(
        _mm256_mul_pd(vx, are),
        _mm256_mul_pd(_mm256_permute_pd(vx, 0x5), aim));
    _mm256_storeu_pd(px + 2 * i, prod);
  }
  for (; i < n; ++i) {
    x[i] *= alpha;
  }
}

void scale_copy_avx2(std::size_t n, cplx alpha, const cplx* src, cplx* dst) {
  const double* ps = reinterpret_cast<const double*>(src);
  double* pd = reinterpret_cast<double*>(dst);
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(ps + 2 * i);
    __m256d prod = _mm256_addsub_pd(
        _mm256_mul_pd(vx, are),
        _mm256_mul_pd(_mm256_permute_pd(vx, 0x5), aim));
    _mm256_storeu_pd(pd + 2 * i, prod);
  }
  for (; i < n; ++i) {
    dst[i] = alpha * src[i];
  }
}

} // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{
      "avx2",       cdot_avx2, norm_sq_avx2,
      axpy_avx2,    axpy_conj_avx2,
      scal_avx2,    scale_copy_avx2,
  };
  return k;
}

} // namespace nogosig::kern

#endif // NOGOSIG_HAVE_AVX2
