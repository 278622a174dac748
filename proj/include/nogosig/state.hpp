#pragma once

#include <span>
#include <vector>

#include "nogosig/common.hpp"
#include "nogosig/layout.hpp"

namespace nogosig {

/// Complex amplitude vector over a factored Hilbert space. Amplitudes must
/// be finite but are not required to be unit norm; the antisymmetrized
/// states this toolkit manipulates are naturally subnormalized.
class Ket {
public:
  Ket(SubsystemLayout layout, std::vector<cplx> amplitudes);

  const SubsystemLayout& layout() const { return layout_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const cplx> amplitudes() const { return amps_; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }

  double norm_sq() const;
  double norm() const;

  /// The same amplitudes wrapped in a different layout of equal total
  /// dimension (relabelling, party reassignment, regrouping).
  Ket with_layout(SubsystemLayout layout) const;

  /// Basis ket |index> over the given layout.
  static Ket basis(SubsystemLayout layout, std::size_t index);

private:
  SubsystemLayout layout_;
  std::vector<cplx> amps_;
};

enum class TraceConvention { Raw, Normalized };

const char* to_string(TraceConvention c);

/// Hermitian positive-semidefinite matrix over a factored space, row-major.
/// Construction validates Hermiticity and trace realness against the global
/// comparison tolerance; Normalized additionally requires trace == 1 within
/// the same tolerance. Positive semidefiniteness is an invariant of the
/// operations producing these matrices and is checked by the test suite
/// rather than on every construction.
class DensityMatrix {
public:
  DensityMatrix(SubsystemLayout layout, std::vector<cplx> row_major,
                TraceConvention convention);

  const SubsystemLayout& layout() const { return layout_; }
  std::size_t dim() const { return layout_.total_dim(); }
  TraceConvention convention() const { return convention_; }

  const cplx& at(std::size_t i, std::size_t j) const {
    return entries_[i * dim() + j];
  }
  std::span<const cplx> entries() const { return entries_; }

  double trace() const;

private:
  SubsystemLayout layout_;
  std::vector<cplx> entries_;
  TraceConvention convention_;
};

} // namespace nogosig
