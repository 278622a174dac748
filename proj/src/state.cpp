#include "nogosig/state.hpp"

#include <cmath>
#include <string>

#include "nogosig/errors.hpp"
#include "nogosig/kernels.hpp"

namespace nogosig {

namespace {

void require_finite(std::span<const cplx> values, const char* what) {
  for (const cplx& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::DimMismatch,
                  std::string(what) + " contains a non-finite value");
    }
  }
}

} // namespace

const char* to_string(TraceConvention c) {
  return c == TraceConvention::Raw ? "RAW" : "NORMALIZED";
}

Ket::Ket(SubsystemLayout layout, std::vector<cplx> amplitudes)
    : layout_(std::move(layout)), amps_(std::move(amplitudes)) {
  if (amps_.size() != layout_.total_dim()) {
    throw Error(ErrorCode::DimMismatch,
                "amplitude count " + std::to_string(amps_.size()) +
                    " does not match layout dimension " +
                    std::to_string(layout_.total_dim()));
  }
  require_finite(amps_, "ket");
}

double Ket::norm_sq() const {
  return kern::active().norm_sq(amps_.size(), amps_.data());
}

double Ket::norm() const { return std::sqrt(norm_sq()); }

Ket Ket::with_layout(SubsystemLayout layout) const {
  return Ket(std::move(layout), amps_);
}

Ket Ket::basis(SubsystemLayout layout, std::size_t index) {
  std::vector<cplx> amps(layout.total_dim(), cplx{0.0, 0.0});
  amps.at(index) = cplx{1.0, 0.0};
  return Ket(std::move(layout), std::move(amps));
}

DensityMatrix::DensityMatrix(SubsystemLayout layout,
                             std::vector<cplx> row_major,
                             TraceConvention convention)
    : layout_(std::move(layout)),
      entries_(std::move(row_major)),
      convention_(convention) {
  const std::size_t d = layout_.total_dim();
  if (entries_.size() != d * d) {
    throw Error(ErrorCode::DimMismatch,
                "entry count " + std::to_string(entries_.size()) +
                    " does not match layout dimension " + std::to_string(d) +
                    " squared");
  }
  require_finite(entries_, "density matrix");

  const double tol = comparison_tolerance();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const cplx diff = entries_[i * d + j] - std::conj(entries_[j * d + i]);
      if (std::abs(diff) > tol) {
        throw Error(ErrorCode::DimMismatch,
                    "matrix is not Hermitian within tolerance");
      }
    }
  }
  double tr_re = 0.0, tr_im = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    tr_re += entries_[i * d + i].real();
    tr_im += entries_[i * d + i].imag();
  }
  if (std::abs(tr_im) > tol) {
    throw Error(ErrorCode::DimMismatch, "trace has a non-real part");
  }
  if (convention_ == TraceConvention::Normalized &&
      std::abs(tr_re - 1.0) > tol) {
    throw Error(ErrorCode::DimMismatch,
                "normalized density matrix has trace " + std::to_string(tr_re));
  }
}

double DensityMatrix::trace() const {
  const std::size_t d = dim();
  double tr = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    tr += entries_[i * d + i].real();
  }
  return tr;
}

} // namespace nogosig
