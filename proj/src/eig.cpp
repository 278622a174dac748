#include "nogosig/eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nogosig {

namespace {

double offdiag_sq(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      acc += std::norm(m.at(i, j));
    }
  }
  return acc;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) {
    return {};
  }

  ComplexMatrix a(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.at(i, j) = 0.5 * (input.at(i, j) + std::conj(input.at(j, i)));
      scale = std::max(scale, std::abs(a.at(i, j)));
    }
  }
  if (scale == 0.0) {
    return std::vector<double>(n, 0.0);
  }

  const double stop = 1e-30 * scale * scale * static_cast<double>(n * n);
  constexpr int kMaxSweeps = 64;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_sq(a) <= stop) {
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a.at(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) {
          continue;
        }
        // Phase factor turning a[p][q] into a real pivot, then a real
        // Jacobi rotation that annihilates it.
        const cplx phase = apq / mag;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (app - aqq) / (2.0 * mag);
        double t;
        if (tau >= 0.0) {
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        } else {
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx gpq = -s * phase;          // G[p][q]
        const cplx gqp = s * std::conj(phase); // G[q][p]

        // Column update: A <- A * G
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a.at(i, p);
          const cplx aiq = a.at(i, q);
          a.at(i, p) = c * aip + gqp * aiq;
          a.at(i, q) = gpq * aip + c * aiq;
        }
        // Row update: A <- G^dagger * A
        for (std::size_t j = 0; j < n; ++j) {
          const cplx apj = a.at(p, j);
          const cplx aqj = a.at(q, j);
          a.at(p, j) = c * apj + std::conj(gqp) * aqj;
          a.at(q, j) = std::conj(gpq) * apj + c * aqj;
        }
        a.at(p, q) = cplx{0.0, 0.0};
        a.at(q, p) = cplx{0.0, 0.0};
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = a.at(i, i).real();
  }
  std::sort(values.begin(), values.end());
  return values;
}

double min_eigenvalue(const ComplexMatrix& m) {
  const std::vector<double> ev = hermitian_eigenvalues(m);
  if (ev.empty()) {
    throw std::invalid_argument("min_eigenvalue of an empty matrix");
  }
  return ev.front();
}

} // namespace nogosig
