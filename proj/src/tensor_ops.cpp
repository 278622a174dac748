#include "nogosig/tensor_ops.hpp"

#include <cmath>
#include <unordered_set>

#include "nogosig/eig.hpp"
#include "nogosig/errors.hpp"
#include "nogosig/kernels.hpp"

namespace nogosig {

Ket tensor_product(const Ket& a, const Ket& b) {
  SubsystemLayout layout = SubsystemLayout::concat(a.layout(), b.layout());
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  std::vector<cplx> out(na * nb);
  const kern::Kernels& k = kern::active();
  for (std::size_t i = 0; i < na; ++i) {
    k.scale_copy(nb, a[i], b.amplitudes().data(), out.data() + i * nb);
  }
  return Ket(std::move(layout), std::move(out));
}

cplx inner_product(const Ket& a, const Ket& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimMismatch,
                "inner product of dimensions " + std::to_string(a.dim()) +
                    " and " + std::to_string(b.dim()));
  }
  return kern::active().cdot(a.dim(), a.amplitudes().data(),
                             b.amplitudes().data());
}

DensityMatrix density_from_ket(const Ket& k) {
  if (k.norm_sq() <= 0.0) {
    throw Error(ErrorCode::ZeroState, "cannot form a density from |0 vector|");
  }
  const std::size_t d = k.dim();
  std::vector<cplx> entries(d * d, cplx{0.0, 0.0});
  const kern::Kernels& kn = kern::active();
  for (std::size_t i = 0; i < d; ++i) {
    kn.axpy_conj(d, k[i], k.amplitudes().data(), entries.data() + i * d);
  }
  return DensityMatrix(k.layout(), std::move(entries), TraceConvention::Raw);
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::span<const std::string> keep) {
  const SubsystemLayout& layout = rho.layout();
  std::unordered_set<std::string> keep_set;
  for (const std::string& label : keep) {
    if (!layout.has_label(label)) {
      throw Error(ErrorCode::UnknownFactor,
                  "no factor labelled '" + label + "'");
    }
    keep_set.insert(label);
  }

  std::vector<std::size_t> kept, traced;
  std::vector<Factor> kept_factors;
  for (std::size_t i = 0; i < layout.factor_count(); ++i) {
    if (keep_set.contains(layout.factor(i).label)) {
      kept.push_back(i);
      kept_factors.push_back(layout.factor(i));
    } else {
      traced.push_back(i);
    }
  }

  std::size_t kept_dim = 1, traced_dim = 1;
  for (std::size_t i : kept) kept_dim *= layout.factor(i).dim;
  for (std::size_t i : traced) traced_dim *= layout.factor(i).dim;

  // Flatten the kept and traced multi-indices into source-index offsets.
  auto offsets = [&](const std::vector<std::size_t>& positions,
                     std::size_t count) {
    std::vector<std::size_t> out(count, 0);
    for (std::size_t flat = 0; flat < count; ++flat) {
      std::size_t rem = flat;
      for (std::size_t k = positions.size(); k-- > 0;) {
        const std::size_t dim = layout.factor(positions[k]).dim;
        out[flat] += (rem % dim) * layout.stride(positions[k]);
        rem /= dim;
      }
    }
    return out;
  };
  const std::vector<std::size_t> kept_off = offsets(kept, kept_dim);
  const std::vector<std::size_t> traced_off = offsets(traced, traced_dim);

  const std::size_t d = rho.dim();
  std::vector<cplx> out(kept_dim * kept_dim, cplx{0.0, 0.0});
  for (std::size_t r = 0; r < kept_dim; ++r) {
    for (std::size_t c = 0; c < kept_dim; ++c) {
      cplx acc{0.0, 0.0};
      for (std::size_t t = 0; t < traced_dim; ++t) {
        acc += rho.entries()[(kept_off[r] + traced_off[t]) * d +
                             (kept_off[c] + traced_off[t])];
      }
      out[r * kept_dim + c] = acc;
    }
  }
  return DensityMatrix(SubsystemLayout(std::move(kept_factors)),
                       std::move(out), rho.convention());
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::initializer_list<std::string> keep) {
  std::vector<std::string> labels(keep);
  return partial_trace(rho, std::span<const std::string>(labels));
}

Ket permute_factors(const Ket& k, std::span<const std::size_t> perm) {
  const SubsystemLayout& layout = k.layout();
  const std::size_t nf = layout.factor_count();
  if (perm.size() != nf) {
    throw Error(ErrorCode::BadPermutation,
                "permutation length " + std::to_string(perm.size()) +
                    " for " + std::to_string(nf) + " factors");
  }
  std::vector<bool> seen(nf, false);
  for (std::size_t p : perm) {
    if (p >= nf || seen[p]) {
      throw Error(ErrorCode::BadPermutation, "not a bijection on positions");
    }
    seen[p] = true;
  }

  std::vector<Factor> new_factors(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    new_factors[i] = layout.factor(perm[i]);
  }
  SubsystemLayout new_layout(std::move(new_factors));

  std::vector<cplx> out(k.dim());
  for (std::size_t idx = 0; idx < k.dim(); ++idx) {
    // idx runs over the NEW layout; gather from the matching old index.
    std::size_t old_index = 0;
    std::size_t rem = idx;
    for (std::size_t i = 0; i < nf; ++i) {
      const std::size_t digit = rem / new_layout.stride(i);
      rem %= new_layout.stride(i);
      old_index += digit * layout.stride(perm[i]);
    }
    out[idx] = k[old_index];
  }
  return Ket(std::move(new_layout), std::move(out));
}

Ket permute_factors(const Ket& k, std::initializer_list<std::size_t> perm) {
  std::vector<std::size_t> p(perm);
  return permute_factors(k, std::span<const std::size_t>(p));
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimMismatch,
                "trace distance between dimensions " +
                    std::to_string(rho.dim()) + " and " +
                    std::to_string(sigma.dim()));
  }
  const std::size_t d = rho.dim();
  ComplexMatrix diff(d);
  for (std::size_t i = 0; i < d * d; ++i) {
    diff.entries()[i] = rho.entries()[i] - sigma.entries()[i];
  }
  double acc = 0.0;
  for (double ev : hermitian_eigenvalues(diff)) {
    acc += std::abs(ev);
  }
  return 0.5 * acc;
}

ComplexMatrix gram_matrix(std::span<const Ket> kets) {
  const std::size_t n = kets.size();
  for (const Ket& k : kets) {
    if (k.dim() != kets[0].dim()) {
      throw Error(ErrorCode::DimMismatch,
                  "gram matrix over kets of unequal dimension");
    }
  }
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.at(i, i) = cplx{kets[i].norm_sq(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = inner_product(kets[i], kets[j]);
      g.at(i, j) = v;
      g.at(j, i) = std::conj(v);
    }
  }
  return g;
}

Ket normalize(const Ket& k) {
  const double n = k.norm();
  if (n <= 1e-12) {
    throw Error(ErrorCode::ZeroState, "cannot normalize a (near-)zero ket");
  }
  std::vector<cplx> out(k.dim());
  kern::active().scale_copy(k.dim(), cplx{1.0 / n, 0.0},
                            k.amplitudes().data(), out.data());
  return Ket(k.layout(), std::move(out));
}

DensityMatrix normalize_density(const DensityMatrix& rho) {
  const double tr = rho.trace();
  if (tr <= 1e-12) {
    throw Error(ErrorCode::ZeroState,
                "cannot normalize a density with near-zero trace");
  }
  std::vector<cplx> out(rho.entries().size());
  kern::active().scale_copy(out.size(), cplx{1.0 / tr, 0.0},
                            rho.entries().data(), out.data());
  return DensityMatrix(rho.layout(), std::move(out),
                       TraceConvention::Normalized);
}

} // namespace nogosig
