#include "nogosig/scenario.hpp"

#include <cmath>
#include <string>

#include "nogosig/errors.hpp"
#include "nogosig/kernels.hpp"

namespace nogosig {

const char* to_string(ControlPolicy p) {
  switch (p) {
    case ControlPolicy::ByProgram: return "by-program";
    case ControlPolicy::ByOriginal: return "by-original";
    case ControlPolicy::Fixed: return "fixed";
  }
  return "?";
}

void OverlapParameters::validate() const {
  if (std::abs(original) > 1.0 + comparison_tolerance()) {
    throw Error(ErrorCode::BadOverlap, "original-state overlap exceeds 1");
  }
  if (std::abs(program) > 1.0 + comparison_tolerance()) {
    throw Error(ErrorCode::BadOverlap, "program-state overlap exceeds 1");
  }
}

void ControlStates::validate() const {
  if (dim < 2) {
    throw Error(ErrorCode::DimMismatch, "control dimension must be >= 2");
  }
  const double tol = 1e-12;
  for (const Ket* k : {&input, &output_first, &output_second}) {
    if (k->dim() != dim) {
      throw Error(ErrorCode::DimMismatch, "control ket dimension mismatch");
    }
    if (std::abs(k->norm() - 1.0) > tol) {
      throw Error(ErrorCode::BadOverlap, "control kets must be unit norm");
    }
  }
  if (std::abs(output_overlap()) > 1.0 + tol) {
    throw Error(ErrorCode::BadOverlap, "control output overlap exceeds 1");
  }
}

namespace {

SubsystemLayout control_layout(std::size_t dim) {
  return single_factor("ctrl", dim, Party::None, Role::Control);
}

} // namespace

ControlStates ControlStates::orthogonal(ControlPolicy policy, std::size_t dim) {
  if (dim < 3) {
    throw Error(ErrorCode::DimMismatch,
                "orthogonal control triple needs dimension >= 3");
  }
  return ControlStates{dim, Ket::basis(control_layout(dim), 0),
                       Ket::basis(control_layout(dim), 1),
                       Ket::basis(control_layout(dim), 2), policy};
}

ControlStates ControlStates::with_overlap(cplx overlap, ControlPolicy policy,
                                          std::size_t dim) {
  if (dim < 3) {
    throw Error(ErrorCode::DimMismatch,
                "control register needs dimension >= 3");
  }
  if (std::abs(overlap) > 1.0) {
    throw Error(ErrorCode::BadOverlap, "control overlap exceeds 1");
  }
  // C1 = e1, C2 = overlap*e1 + sqrt(1-|overlap|^2)*e2, C = e0 orthogonal
  // to both.
  std::vector<cplx> c2(dim, cplx{0.0, 0.0});
  c2[1] = overlap;
  c2[2] = std::sqrt(std::max(0.0, 1.0 - std::norm(overlap)));
  return ControlStates{dim, Ket::basis(control_layout(dim), 0),
                       Ket::basis(control_layout(dim), 1),
                       Ket(control_layout(dim), std::move(c2)), policy};
}

std::size_t ConstructorConfig::program_dim() const {
  std::size_t k = 1;
  for (std::size_t i = 0; i < program_blanks; ++i) k *= qudit_dim;
  return k;
}

std::size_t ConstructorConfig::blank_space_dim() const {
  std::size_t m = 1;
  for (std::size_t i = 0; i < total_blanks; ++i) m *= qudit_dim;
  return m;
}

std::size_t ConstructorConfig::spare_blanks_after() const {
  return total_blanks - 2 * (program_blanks + 1);
}

void ConstructorConfig::validate() const {
  if (qudit_dim < 2) {
    throw Error(ErrorCode::DimMismatch, "qudit dimension must be >= 2");
  }
  if (program_blanks < 1) {
    throw Error(ErrorCode::DimMismatch, "program blank count must be >= 1");
  }
  if (total_blanks < 2 * (program_blanks + 1)) {
    throw Error(ErrorCode::DimMismatch,
                "need n >= 2(m+1) blanks; got n=" +
                    std::to_string(total_blanks) +
                    ", m=" + std::to_string(program_blanks));
  }
  controls.validate();
  overlaps.validate();
}

ConstructorConfig ConstructorConfig::desk_default(cplx original_overlap,
                                                  cplx program_overlap,
                                                  ControlPolicy policy) {
  ConstructorConfig cfg;
  cfg.controls = ControlStates::orthogonal(policy);
  cfg.overlaps = OverlapParameters{original_overlap, program_overlap};
  cfg.validate();
  return cfg;
}

std::pair<Ket, Ket> make_nonorthogonal_pair(std::size_t dim, cplx overlap) {
  if (dim < 2) {
    throw Error(ErrorCode::DimMismatch, "pair needs dimension >= 2");
  }
  if (std::abs(overlap) > 1.0 + comparison_tolerance()) {
    throw Error(ErrorCode::BadOverlap,
                "requested overlap has magnitude > 1");
  }
  SubsystemLayout layout = single_factor("q", dim);
  std::vector<cplx> v2(dim, cplx{0.0, 0.0});
  v2[0] = overlap;
  v2[1] = std::sqrt(std::max(0.0, 1.0 - std::norm(overlap)));
  return {Ket::basis(layout, 0), Ket(std::move(layout), std::move(v2))};
}

Ket build_singlet_like(const Ket& v1, const Ket& v2, std::string alice_label,
                       std::string bob_label, Role role) {
  if (v1.dim() != v2.dim()) {
    throw Error(ErrorCode::DimMismatch,
                "antisymmetrized pair needs equal dimensions");
  }
  const double n1 = v1.norm();
  const double n2 = v2.norm();
  if (n1 <= 1e-12 || n2 <= 1e-12) {
    throw Error(ErrorCode::ZeroState, "antisymmetrized pair of a zero ket");
  }
  const double cosine = std::abs(inner_product(v1, v2)) / (n1 * n2);
  if (cosine >= 1.0 - kDegeneracyMargin) {
    throw Error(ErrorCode::DegeneratePair,
                "inputs are (numerically) parallel; antisymmetrization "
                "annihilates them");
  }

  const std::size_t d = v1.dim();
  SubsystemLayout layout({Factor{std::move(alice_label), d, Party::Alice, role},
                          Factor{std::move(bob_label), d, Party::Bob, role}});
  std::vector<cplx> amps(d * d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      amps[i * d + j] = inv_sqrt2 * (v1[i] * v2[j] - v2[i] * v1[j]);
    }
  }
  return Ket(std::move(layout), std::move(amps));
}

Ket build_joint_state(const ConstructorConfig& cfg) {
  cfg.validate();
  auto [psi1, psi2] = make_nonorthogonal_pair(cfg.qudit_dim,
                                              cfg.overlaps.original);
  auto [prog1, prog2] = make_nonorthogonal_pair(cfg.program_dim(),
                                                cfg.overlaps.program);
  Ket chi1 = build_singlet_like(psi1, psi2, kPsiAlice, kPsiBob, Role::Original);
  Ket chi2 = build_singlet_like(prog1, prog2, kProgAlice, kProgBob,
                                Role::Program);
  // [psi_a psi_b prog_a prog_b] -> [psi_a prog_a psi_b prog_b]
  return permute_factors(tensor_product(chi1, chi2), {0, 2, 1, 3});
}

Ket attach_ancilla(const Ket& joint, const ConstructorConfig& cfg) {
  cfg.validate();
  Ket out = tensor_product(
      joint, Ket::basis(single_factor(kBlankBob, cfg.qudit_dim, Party::Bob,
                                      Role::Blank),
                        0));
  out = tensor_product(
      out, Ket::basis(single_factor(kProgBlankBob, cfg.program_dim(),
                                    Party::Bob, Role::Blank),
                      0));
  std::vector<cplx> control_amps(cfg.controls.input.amplitudes().begin(),
                                 cfg.controls.input.amplitudes().end());
  out = tensor_product(
      out, Ket(single_factor(kControlBob, cfg.controls.dim, Party::Bob,
                             Role::Control),
               std::move(control_amps)));
  const std::size_t spares = cfg.total_blanks - (cfg.program_blanks + 1);
  for (std::size_t i = 0; i < spares; ++i) {
    out = tensor_product(
        out, Ket::basis(single_factor("spare_b" + std::to_string(i + 1),
                                      cfg.qudit_dim, Party::Bob, Role::Blank),
                        0));
  }
  return out;
}

DensityMatrix alice_reduced_reference(const ConstructorConfig& cfg) {
  cfg.validate();
  auto [psi1, psi2] = make_nonorthogonal_pair(cfg.qudit_dim,
                                              cfg.overlaps.original);
  auto [prog1, prog2] = make_nonorthogonal_pair(cfg.program_dim(),
                                                cfg.overlaps.program);

  SubsystemLayout alice(
      {Factor{kPsiAlice, cfg.qudit_dim, Party::Alice, Role::Original},
       Factor{kProgAlice, cfg.program_dim(), Party::Alice, Role::Program}});

  // The four product vectors on Alice's side, indexed (original, program).
  auto dyad_vec = [&](int i, int j) {
    const Ket& a = (i == 1) ? psi1 : psi2;
    const Ket& b = (j == 1) ? prog1 : prog2;
    Ket t = tensor_product(
        a.with_layout(single_factor(kPsiAlice, a.dim(), Party::Alice,
                                    Role::Original)),
        b.with_layout(single_factor(kProgAlice, b.dim(), Party::Alice,
                                    Role::Program)));
    return std::vector<cplx>(t.amplitudes().begin(), t.amplitudes().end());
  };
  const std::vector<std::vector<cplx>> v = {dyad_vec(1, 1), dyad_vec(2, 1),
                                            dyad_vec(1, 2), dyad_vec(2, 2)};
  auto idx = [](int i, int j) { return (j - 1) * 2 + (i - 1); };

  const cplx s = inner_product(psi1, psi2);        // <psi1|psi2>
  const cplx p = inner_product(prog1, prog2);      // <P1|P2>
  const cplx sb = std::conj(s);                    // <psi2|psi1>
  const cplx pb = std::conj(p);                    // <P2|P1>

  const std::size_t d = alice.total_dim();
  std::vector<cplx> rho(d * d, cplx{0.0, 0.0});
  const kern::Kernels& kn = kern::active();
  // coeff * |ket(a)><ket(b)|
  auto add_dyad = [&](int ia, int ja, int ib, int jb, cplx coeff) {
    const std::vector<cplx>& ka = v[idx(ia, ja)];
    const std::vector<cplx>& kb = v[idx(ib, jb)];
    for (std::size_t r = 0; r < d; ++r) {
      kn.axpy_conj(d, coeff * ka[r], kb.data(), rho.data() + r * d);
    }
  };

  const cplx quarter{0.25, 0.0};
  // Projector terms.
  add_dyad(1, 1, 1, 1, quarter);
  add_dyad(2, 1, 2, 1, quarter);
  add_dyad(1, 2, 1, 2, quarter);
  add_dyad(2, 2, 2, 2, quarter);
  // Cross terms, with the overlap weights each dyad carries.
  add_dyad(2, 1, 1, 1, -quarter * sb);
  add_dyad(1, 2, 1, 1, -quarter * pb);
  add_dyad(2, 2, 1, 1, quarter * sb * pb);
  add_dyad(1, 1, 2, 1, -quarter * s);
  add_dyad(1, 2, 2, 1, quarter * s * pb);
  add_dyad(2, 2, 2, 1, -quarter * pb);
  add_dyad(1, 1, 1, 2, -quarter * p);
  add_dyad(2, 1, 1, 2, quarter * sb * p);
  add_dyad(2, 2, 1, 2, -quarter * s);
  add_dyad(1, 1, 2, 2, quarter * s * p);
  add_dyad(2, 1, 2, 2, -quarter * p);
  add_dyad(1, 2, 2, 2, -quarter * s);

  return DensityMatrix(std::move(alice), std::move(rho), TraceConvention::Raw);
}

} // namespace nogosig
