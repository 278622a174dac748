#pragma once

#include <vector>

#include "nogosig/matrix.hpp"

namespace nogosig {

/// Eigenvalues of a Hermitian matrix, ascending. The input is explicitly
/// Hermitized ((M + M^dagger)/2) before iterating, so tiny round-off
/// asymmetry in the input does not perturb the result. Cyclic Jacobi with
/// complex rotations; intended for the modest dimensions this toolkit
/// works at.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Smallest eigenvalue, convenience wrapper.
double min_eigenvalue(const ComplexMatrix& m);

} // namespace nogosig
