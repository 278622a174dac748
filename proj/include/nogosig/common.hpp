#pragma once

#include <complex>
#include <string>

namespace nogosig {

using cplx = std::complex<double>;

inline constexpr const char* kToolVersion = "0.1.0";

/// Global comparison tolerance used by validity checks (Hermiticity,
/// trace realness, unit-norm checks). Mutable so callers can tighten or
/// relax it process-wide; defaults to 1e-10.
double& comparison_tolerance();

/// Threshold on the normalized trace-distance gap above which a report
/// is classified as signalling.
inline constexpr double kSignallingThreshold = 1e-8;

/// Overlaps with |overlap| >= 1 - kDegeneracyMargin make antisymmetrized
/// pairs numerically parallel and are rejected as degenerate.
inline constexpr double kDegeneracyMargin = 1e-9;

} // namespace nogosig
