#include "nogosig/kernels.hpp"

#include <atomic>

namespace nogosig {

double& comparison_tolerance() {
  static double tol = 1e-10;
  return tol;
}

} // namespace nogosig

namespace nogosig::kern {

bool avx2_available() {
#if defined(NOGOSIG_HAVE_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const Kernels* detect() {
#if defined(NOGOSIG_HAVE_AVX2)
  if (avx2_available()) {
    return &avx2_kernels();
  }
#endif
  return &scalar_kernels();
}

std::atomic<const Kernels*>& slot() {
  static std::atomic<const Kernels*> current{detect()};
  return current;
}

} // namespace

const Kernels& active() { return *slot().load(std::memory_order_acquire); }

void select(const Kernels& k) { slot().store(&k, std::memory_order_release); }

void select_auto() { slot().store(detect(), std::memory_order_release); }

} // namespace nogosig::kern
