#include "nogosig/replication.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nogosig/eig.hpp"
#include "nogosig/errors.hpp"
#include "nogosig/kernels.hpp"
#include "nogosig/tensor_ops.hpp"

namespace nogosig {

namespace {

/// In-place lower Cholesky factor of a Hermitian PD matrix.
/// Returns false when a pivot fails to be positive.
bool cholesky(ComplexMatrix& g) {
  const std::size_t n = g.size();
  for (std::size_t j = 0; j < n; ++j) {
    double diag = g.at(j, j).real();
    for (std::size_t k = 0; k < j; ++k) {
      diag -= std::norm(g.at(j, k));
    }
    if (diag <= 0.0) {
      return false;
    }
    const double ljj = std::sqrt(diag);
    g.at(j, j) = cplx{ljj, 0.0};
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx v = g.at(i, j);
      for (std::size_t k = 0; k < j; ++k) {
        v -= g.at(i, k) * std::conj(g.at(j, k));
      }
      g.at(i, j) = v / ljj;
    }
  }
  return true;
}

/// Solve L L^dagger x = b given the lower factor L.
std::vector<cplx> cholesky_solve(const ComplexMatrix& l,
                                 std::vector<cplx> b) {
  const std::size_t n = l.size();
  for (std::size_t i = 0; i < n; ++i) {
    cplx v = b[i];
    for (std::size_t j = 0; j < i; ++j) {
      v -= l.at(i, j) * b[j];
    }
    b[i] = v / l.at(i, i).real();
  }
  for (std::size_t i = n; i-- > 0;) {
    cplx v = b[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      v -= std::conj(l.at(j, i)) * b[j];
    }
    b[i] = v / l.at(i, i).real();
  }
  return b;
}

/// Coefficients alpha with k ~= sum_i alpha_i * inputs_i, plus the
/// residual norm of the projection. `where` names the component in the
/// OutsideSpan message.
std::vector<cplx> span_coefficients(const LinearMapSpec& map,
                                    std::span<const cplx> k,
                                    const std::string& where) {
  if (map.degenerate()) {
    throw Error(ErrorCode::DegenerateSpec,
                "map inputs are linearly dependent (min Gram eigenvalue " +
                    std::to_string(map.min_gram_eigenvalue()) + ")");
  }
  const std::size_t n = map.pairs().size();
  const kern::Kernels& kn = kern::active();

  std::vector<cplx> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Ket& in = map.pairs()[i].first;
    b[i] = kn.cdot(k.size(), in.amplitudes().data(), k.data());
  }
  ComplexMatrix l = map.input_gram();
  if (!cholesky(l)) {
    throw Error(ErrorCode::DegenerateSpec,
                "input Gram matrix is not positive definite");
  }
  std::vector<cplx> alpha = cholesky_solve(l, std::move(b));

  std::vector<cplx> residual(k.begin(), k.end());
  for (std::size_t i = 0; i < n; ++i) {
    kn.axpy(residual.size(), -alpha[i],
            map.pairs()[i].first.amplitudes().data(), residual.data());
  }
  const double k_norm = std::sqrt(kn.norm_sq(k.size(), k.data()));
  const double res_norm =
      std::sqrt(kn.norm_sq(residual.size(), residual.data()));
  if (res_norm > map.span_tolerance() * k_norm) {
    throw Error(ErrorCode::OutsideSpan,
                where + " lies outside the span of the map inputs "
                "(relative residual " +
                    std::to_string(res_norm / std::max(k_norm, 1e-300)) + ")");
  }
  return alpha;
}

Ket basis0(std::string label, std::size_t dim, Role role = Role::Blank,
           Party party = Party::None) {
  return Ket::basis(single_factor(std::move(label), dim, party, role), 0);
}

Ket relabel(const Ket& k, std::string label, Role role = Role::Generic,
            Party party = Party::None) {
  return k.with_layout(single_factor(std::move(label), k.dim(), party, role));
}

} // namespace

LinearMapSpec::LinearMapSpec(SubsystemLayout input_layout,
                             SubsystemLayout output_layout,
                             std::vector<std::pair<Ket, Ket>> pairs,
                             double span_tolerance)
    : input_layout_(std::move(input_layout)),
      output_layout_(std::move(output_layout)),
      pairs_(std::move(pairs)),
      span_tolerance_(span_tolerance) {
  if (pairs_.empty()) {
    throw Error(ErrorCode::DegenerateSpec, "map spec with no pairs");
  }
  std::vector<Ket> inputs;
  inputs.reserve(pairs_.size());
  for (const auto& [in, out] : pairs_) {
    if (in.dim() != input_layout_.total_dim()) {
      throw Error(ErrorCode::DimMismatch,
                  "map input does not match the input layout dimension");
    }
    if (out.dim() != output_layout_.total_dim()) {
      throw Error(ErrorCode::DimMismatch,
                  "map output does not match the output layout dimension");
    }
    inputs.push_back(in);
  }
  input_gram_ = gram_matrix(inputs);
  min_gram_eigenvalue_ = min_eigenvalue(input_gram_);
  degenerate_ = min_gram_eigenvalue_ <= span_tolerance_;
}

ReplicationOutputs replication_outputs(const ConstructorConfig& cfg) {
  cfg.validate();
  const std::size_t n_dim = cfg.qudit_dim;
  const std::size_t k_dim = cfg.program_dim();
  auto [psi1, psi2] = make_nonorthogonal_pair(n_dim, cfg.overlaps.original);
  auto [prog1, prog2] = make_nonorthogonal_pair(k_dim, cfg.overlaps.program);

  auto control_for = [&](int i, int j) -> const Ket& {
    switch (cfg.controls.policy) {
      case ControlPolicy::ByProgram:
        return j == 1 ? cfg.controls.output_first : cfg.controls.output_second;
      case ControlPolicy::ByOriginal:
        return i == 1 ? cfg.controls.output_first : cfg.controls.output_second;
      case ControlPolicy::Fixed:
        break;
    }
    return cfg.controls.output_first;
  };

  auto build = [&](int i, int j) {
    const Ket& psi = (i == 1) ? psi1 : psi2;
    const Ket& prog = (j == 1) ? prog1 : prog2;
    Ket out = relabel(psi, "orig", Role::Original);
    out = tensor_product(out, relabel(prog, "prog", Role::Program));
    out = tensor_product(out, relabel(psi, "rep_orig", Role::Original));
    out = tensor_product(out, basis0("rep_blank", n_dim));
    out = tensor_product(out, relabel(prog, "rep_prog", Role::Program));
    out = tensor_product(out, basis0("rep_pblank", k_dim));
    out = tensor_product(out, relabel(control_for(i, j), "ctrl",
                                      Role::Control));
    for (std::size_t sp = 0; sp < cfg.spare_blanks_after(); ++sp) {
      out = tensor_product(
          out, basis0("spare" + std::to_string(sp + 1), n_dim));
    }
    return out;
  };
  return ReplicationOutputs{build(1, 1), build(2, 1), build(1, 2),
                            build(2, 2)};
}

LinearMapSpec perfect_replication_map(const ConstructorConfig& cfg) {
  cfg.validate();
  if (std::abs(cfg.overlaps.original) >= 1.0 - kDegeneracyMargin ||
      std::abs(cfg.overlaps.program) >= 1.0 - kDegeneracyMargin) {
    throw Error(ErrorCode::DegenerateSpec,
                "an overlap magnitude of 1 makes the map inputs linearly "
                "dependent");
  }
  const std::size_t n_dim = cfg.qudit_dim;
  const std::size_t k_dim = cfg.program_dim();
  auto [psi1, psi2] = make_nonorthogonal_pair(n_dim, cfg.overlaps.original);
  auto [prog1, prog2] = make_nonorthogonal_pair(k_dim, cfg.overlaps.program);

  auto input_for = [&](int i, int j) {
    const Ket& psi = (i == 1) ? psi1 : psi2;
    const Ket& prog = (j == 1) ? prog1 : prog2;
    Ket in = relabel(psi, "orig", Role::Original);
    in = tensor_product(in, basis0("blank", n_dim));
    in = tensor_product(in, relabel(prog, "prog", Role::Program));
    in = tensor_product(in, basis0("pblank", k_dim));
    in = tensor_product(in, relabel(cfg.controls.input, "ctrl",
                                    Role::Control));
    const std::size_t spares = cfg.total_blanks - (cfg.program_blanks + 1);
    for (std::size_t sp = 0; sp < spares; ++sp) {
      in = tensor_product(in, basis0("spare" + std::to_string(sp + 1), n_dim));
    }
    return in;
  };

  ReplicationOutputs outs = replication_outputs(cfg);
  std::vector<std::pair<Ket, Ket>> pairs;
  pairs.emplace_back(input_for(1, 1), std::move(outs.out_11));
  pairs.emplace_back(input_for(2, 1), std::move(outs.out_21));
  pairs.emplace_back(input_for(1, 2), std::move(outs.out_12));
  pairs.emplace_back(input_for(2, 2), std::move(outs.out_22));

  SubsystemLayout in_layout = pairs[0].first.layout();
  SubsystemLayout out_layout = pairs[0].second.layout();
  return LinearMapSpec(std::move(in_layout), std::move(out_layout),
                       std::move(pairs));
}

Ket apply_map_spec(const LinearMapSpec& map, const Ket& k) {
  if (k.dim() != map.input_layout().total_dim()) {
    throw Error(ErrorCode::DimMismatch,
                "ket dimension does not match the map input layout");
  }
  const std::vector<cplx> alpha =
      span_coefficients(map, k.amplitudes(), "the ket");
  std::vector<cplx> out(map.output_layout().total_dim(), cplx{0.0, 0.0});
  const kern::Kernels& kn = kern::active();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    kn.axpy(out.size(), alpha[i], map.pairs()[i].second.amplitudes().data(),
            out.data());
  }
  return Ket(map.output_layout(), std::move(out));
}

Ket apply_local_map(const Ket& joint, const LinearMapSpec& map, Party party) {
  const SubsystemLayout& layout = joint.layout();
  std::vector<std::size_t> party_pos;
  std::vector<std::size_t> other_pos;
  for (std::size_t i = 0; i < layout.factor_count(); ++i) {
    (layout.factor(i).party == party ? party_pos : other_pos).push_back(i);
  }
  if (party_pos.empty()) {
    throw Error(ErrorCode::UnknownFactor,
                std::string("joint state has no factors for party ") +
                    to_string(party));
  }
  const SubsystemLayout& in_layout = map.input_layout();
  if (party_pos.size() != in_layout.factor_count()) {
    throw Error(ErrorCode::DimMismatch,
                "party factor count does not match the map input layout");
  }
  for (std::size_t i = 0; i < party_pos.size(); ++i) {
    if (layout.factor(party_pos[i]).dim != in_layout.factor(i).dim) {
      throw Error(ErrorCode::DimMismatch,
                  "party factor dimensions do not match the map input layout");
    }
  }

  // Move the party's factors to the least significant positions.
  std::vector<std::size_t> perm = other_pos;
  perm.insert(perm.end(), party_pos.begin(), party_pos.end());
  const Ket arranged = permute_factors(joint, perm);

  const std::size_t party_dim = in_layout.total_dim();
  const std::size_t other_dim = arranged.dim() / party_dim;
  const std::size_t out_dim = map.output_layout().total_dim();
  const kern::Kernels& kn = kern::active();

  std::vector<cplx> result(other_dim * out_dim, cplx{0.0, 0.0});
  for (std::size_t r = 0; r < other_dim; ++r) {
    std::span<const cplx> row =
        arranged.amplitudes().subspan(r * party_dim, party_dim);
    const std::vector<cplx> alpha = span_coefficients(
        map, row, "the party component at remote index " + std::to_string(r));
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      kn.axpy(out_dim, alpha[i], map.pairs()[i].second.amplitudes().data(),
              result.data() + r * out_dim);
    }
  }

  std::vector<Factor> factors;
  for (std::size_t i : other_pos) {
    factors.push_back(layout.factor(i));
  }
  for (const Factor& f : map.output_layout().factors()) {
    Factor g = f;
    g.party = party;
    factors.push_back(std::move(g));
  }
  return Ket(SubsystemLayout(std::move(factors)), std::move(result));
}

RealMatrix isometry_defect(const LinearMapSpec& map) {
  std::vector<Ket> outputs;
  outputs.reserve(map.pairs().size());
  for (const auto& [in, out] : map.pairs()) {
    outputs.push_back(out);
  }
  const ComplexMatrix out_gram = gram_matrix(outputs);
  const ComplexMatrix& in_gram = map.input_gram();
  const std::size_t n = map.pairs().size();
  RealMatrix defect(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      defect.at(i, j) = std::abs(out_gram.at(i, j) - in_gram.at(i, j));
    }
  }
  return defect;
}

double max_entry(const RealMatrix& m) {
  double best = 0.0;
  for (double v : m.entries()) {
    best = std::max(best, v);
  }
  return best;
}

Ket post_replication_joint(const ConstructorConfig& cfg) {
  cfg.validate();
  const LinearMapSpec map = perfect_replication_map(cfg);
  Ket joint = attach_ancilla(build_joint_state(cfg), cfg);
  // Bob's factors come out of attach_ancilla as [psi_b, prog_b, blank_b,
  // pblank_b, ctrl_b, spares...]; the machine consumes them in the order
  // [orig, blank, prog, pblank, ctrl, spares...].
  std::vector<std::size_t> perm = {0, 1, 2, 4, 3, 5, 6};
  for (std::size_t i = 7; i < joint.layout().factor_count(); ++i) {
    perm.push_back(i);
  }
  joint = permute_factors(joint, perm);
  return apply_local_map(joint, map, Party::Bob);
}

DensityMatrix alice_reduced_after(const ConstructorConfig& cfg) {
  const Ket chi_s = post_replication_joint(cfg);
  DensityMatrix rho = partial_trace(density_from_ket(chi_s),
                                    {kPsiAlice, kProgAlice});
  const DensityMatrix terms = alice_reduced_after_terms(cfg);
  double frob_sq = 0.0;
  for (std::size_t i = 0; i < rho.entries().size(); ++i) {
    frob_sq += std::norm(rho.entries()[i] - terms.entries()[i]);
  }
  if (std::sqrt(frob_sq) > 1e-10) {
    throw std::logic_error(
        "partial-trace and dyad-expansion routes disagree: Frobenius "
        "distance " +
        std::to_string(std::sqrt(frob_sq)));
  }
  return rho;
}

DensityMatrix alice_reduced_after_terms(const ConstructorConfig& cfg) {
  cfg.validate();
  const ReplicationOutputs outs = replication_outputs(cfg);
  auto [psi1, psi2] = make_nonorthogonal_pair(cfg.qudit_dim,
                                              cfg.overlaps.original);
  auto [prog1, prog2] = make_nonorthogonal_pair(cfg.program_dim(),
                                                cfg.overlaps.program);

  SubsystemLayout alice(
      {Factor{kPsiAlice, cfg.qudit_dim, Party::Alice, Role::Original},
       Factor{kProgAlice, cfg.program_dim(), Party::Alice, Role::Program}});

  // Joint terms: sign_t * A_t (x) O_t, where the tensor expansion of the
  // two antisymmetrized pairs attaches Bob's machine output for (psi_i,
  // P_j) to the OPPOSITE Alice indices.
  auto alice_vec = [&](const Ket& psi, const Ket& prog) {
    return tensor_product(
        psi.with_layout(single_factor(kPsiAlice, psi.dim(), Party::Alice,
                                      Role::Original)),
        prog.with_layout(single_factor(kProgAlice, prog.dim(), Party::Alice,
                                       Role::Program)));
  };
  struct Term {
    double sign;
    Ket alice;
    const Ket* bob;
  };
  const std::vector<Term> terms = {
      {+1.0, alice_vec(psi1, prog1), &outs.out_22},
      {-1.0, alice_vec(psi1, prog2), &outs.out_21},
      {-1.0, alice_vec(psi2, prog1), &outs.out_12},
      {+1.0, alice_vec(psi2, prog2), &outs.out_11},
  };

  const std::size_t d = alice.total_dim();
  std::vector<cplx> rho(d * d, cplx{0.0, 0.0});
  const kern::Kernels& kn = kern::active();
  for (const Term& ta : terms) {
    for (const Term& tb : terms) {
      const cplx weight = 0.25 * ta.sign * tb.sign *
                          inner_product(*tb.bob, *ta.bob);
      if (weight == cplx{0.0, 0.0}) {
        continue;
      }
      for (std::size_t r = 0; r < d; ++r) {
        kn.axpy_conj(d, weight * ta.alice[r], tb.alice.amplitudes().data(),
                     rho.data() + r * d);
      }
    }
  }
  return DensityMatrix(std::move(alice), std::move(rho),
                       TraceConvention::Raw);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NoSignalling: return "NO_SIGNALLING";
    case Verdict::Signalling: return "SIGNALLING";
    case Verdict::Degenerate: return "DEGENERATE";
  }
  return "?";
}

namespace {

Verdict classify(double gap_norm) {
  return gap_norm > kSignallingThreshold ? Verdict::Signalling
                                         : Verdict::NoSignalling;
}

} // namespace

SignallingReport signalling_gap(const ConstructorConfig& cfg) {
  cfg.validate();
  SignallingReport report;
  report.s = cfg.overlaps.original;
  report.p = cfg.overlaps.program;
  report.c = cfg.controls.output_overlap();

  if (std::abs(report.s) >= 1.0 - kDegeneracyMargin ||
      std::abs(report.p) >= 1.0 - kDegeneracyMargin) {
    report.verdict = Verdict::Degenerate;
    return report;
  }

  // Overlaps close enough to 1 can still push the input Gram matrix below
  // the span tolerance; report those in-band as degenerate too.
  if (perfect_replication_map(cfg).degenerate()) {
    report.verdict = Verdict::Degenerate;
    return report;
  }

  const Ket joint = build_joint_state(cfg);
  DensityMatrix before = partial_trace(density_from_ket(joint),
                                       {kPsiAlice, kProgAlice});
  DensityMatrix after = alice_reduced_after(cfg);

  report.gap_raw = trace_distance(before, after);
  DensityMatrix before_norm = normalize_density(before);
  DensityMatrix after_norm = normalize_density(after);
  report.gap_norm = trace_distance(before_norm, after_norm);
  report.gram_defect_max =
      max_entry(isometry_defect(perfect_replication_map(cfg)));
  report.verdict = classify(report.gap_norm);

  report.before_raw = std::move(before);
  report.before_normalized = std::move(before_norm);
  report.after_raw = std::move(after);
  report.after_normalized = std::move(after_norm);
  return report;
}

SignallingReport no_cloning_gap(cplx overlap, std::size_t dim) {
  SignallingReport report;
  report.s = overlap;

  if (std::abs(overlap) >= 1.0 - kDegeneracyMargin) {
    report.verdict = Verdict::Degenerate;
    return report;
  }

  auto [psi1, psi2] = make_nonorthogonal_pair(dim, overlap);
  Ket chi = build_singlet_like(psi1, psi2, kPsiAlice, kPsiBob,
                               Role::Original);
  Ket joint = tensor_product(
      chi, basis0(kBlankBob, dim, Role::Blank, Party::Bob));

  auto padded = [&](const Ket& psi, const Ket& copy) {
    return tensor_product(relabel(psi, "orig", Role::Original),
                          relabel(copy, "copy", Role::Blank));
  };
  std::vector<std::pair<Ket, Ket>> pairs;
  Ket blank = basis0("copy", dim);
  pairs.emplace_back(padded(psi1, blank), padded(psi1, psi1));
  pairs.emplace_back(padded(psi2, blank), padded(psi2, psi2));
  SubsystemLayout io_layout = pairs[0].first.layout();
  LinearMapSpec cloner(io_layout, io_layout, std::move(pairs));

  DensityMatrix before =
      partial_trace(density_from_ket(joint), {kPsiAlice});
  const Ket after_joint = apply_local_map(joint, cloner, Party::Bob);
  DensityMatrix after =
      partial_trace(density_from_ket(after_joint), {kPsiAlice});

  report.gap_raw = trace_distance(before, after);
  DensityMatrix before_norm = normalize_density(before);
  DensityMatrix after_norm = normalize_density(after);
  report.gap_norm = trace_distance(before_norm, after_norm);
  report.gram_defect_max = max_entry(isometry_defect(cloner));
  report.verdict = classify(report.gap_norm);

  report.before_raw = std::move(before);
  report.before_normalized = std::move(before_norm);
  report.after_raw = std::move(after);
  report.after_normalized = std::move(after_norm);
  return report;
}

} // namespace nogosig
