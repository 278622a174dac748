#pragma once

#include <span>
#include <string>
#include <vector>

#include "nogosig/matrix.hpp"
#include "nogosig/state.hpp"

namespace nogosig {

/// Kronecker product; result layout is a's factors followed by b's.
/// Throws LayoutLabelClash when the two layouts share a label.
Ket tensor_product(const Ket& a, const Ket& b);

/// sum_i conj(a[i]) * b[i]. Layouts may differ as long as the total
/// dimensions agree; throws DimMismatch otherwise.
cplx inner_product(const Ket& a, const Ket& b);

/// |k><k| with Raw trace convention (trace == |k|^2).
/// Throws ZeroState for the zero vector.
DensityMatrix density_from_ket(const Ket& k);

/// Trace out every factor not named in `keep`; kept factors retain their
/// original order. Tracing out everything yields a 1x1 matrix holding the
/// trace. Throws UnknownFactor for labels absent from the layout.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const std::string> keep);
DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::initializer_list<std::string> keep);

/// Reorder tensor factors. perm[k] is the position, in the input layout,
/// of the factor that lands at position k of the result. Amplitudes are
/// moved, never recomputed, so round trips are bit-exact.
Ket permute_factors(const Ket& k, std::span<const std::size_t> perm);
Ket permute_factors(const Ket& k, std::initializer_list<std::size_t> perm);

/// (1/2) sum |eigenvalues(rho - sigma)|, on the Hermitized difference.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// G[i][j] = <kets[i]|kets[j]>. All kets must share a total dimension.
ComplexMatrix gram_matrix(std::span<const Ket> kets);

/// k / |k|; throws ZeroState when |k| <= 1e-12.
Ket normalize(const Ket& k);

/// rho / trace(rho), convention Normalized; throws ZeroState when the
/// trace is <= 1e-12.
DensityMatrix normalize_density(const DensityMatrix& rho);

} // namespace nogosig
