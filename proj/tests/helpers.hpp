#pragma once

#include <random>
#include <vector>

#include "nogosig/state.hpp"
#include "nogosig/tensor_ops.hpp"

namespace testutil {

using nogosig::cplx;
using nogosig::DensityMatrix;
using nogosig::Ket;
using nogosig::SubsystemLayout;

inline std::vector<cplx> random_amplitudes(std::size_t n,
                                           std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (cplx& x : v) {
    x = cplx{dist(rng), dist(rng)};
  }
  return v;
}

inline Ket random_ket(SubsystemLayout layout, std::mt19937_64& rng) {
  const std::size_t n = layout.total_dim();
  return Ket(std::move(layout), random_amplitudes(n, rng));
}

inline Ket random_unit_ket(SubsystemLayout layout, std::mt19937_64& rng) {
  return nogosig::normalize(random_ket(std::move(layout), rng));
}

/// Random mixed state: a convex-ish combination of `rank` pure dyads
/// (Raw convention, positive trace).
inline DensityMatrix random_density(SubsystemLayout layout,
                                    std::mt19937_64& rng,
                                    std::size_t rank = 3) {
  const std::size_t d = layout.total_dim();
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  std::vector<cplx> entries(d * d, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < rank; ++k) {
    const Ket v = random_unit_ket(layout, rng);
    const double w = weight(rng);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        entries[i * d + j] += w * v[i] * std::conj(v[j]);
      }
    }
  }
  return DensityMatrix(std::move(layout), std::move(entries),
                       nogosig::TraceConvention::Raw);
}

inline double frobenius_distance(const DensityMatrix& a,
                                 const DensityMatrix& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    acc += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(acc);
}

inline double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return best;
}

} // namespace testutil
