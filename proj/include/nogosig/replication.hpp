#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nogosig/matrix.hpp"
#include "nogosig/scenario.hpp"
#include "nogosig/state.hpp"

namespace nogosig {

/// A linear map defined extensionally by input -> output ket pairs and
/// extended linearly to the span of the inputs. The input family must be
/// linearly independent: a Gram matrix whose smallest eigenvalue does not
/// exceed span_tolerance marks the spec degenerate, and applying a
/// degenerate spec raises DegenerateSpec.
class LinearMapSpec {
public:
  LinearMapSpec(SubsystemLayout input_layout, SubsystemLayout output_layout,
                std::vector<std::pair<Ket, Ket>> pairs,
                double span_tolerance = 1e-9);

  const SubsystemLayout& input_layout() const { return input_layout_; }
  const SubsystemLayout& output_layout() const { return output_layout_; }
  const std::vector<std::pair<Ket, Ket>>& pairs() const { return pairs_; }
  double span_tolerance() const { return span_tolerance_; }

  bool degenerate() const { return degenerate_; }
  double min_gram_eigenvalue() const { return min_gram_eigenvalue_; }
  const ComplexMatrix& input_gram() const { return input_gram_; }

private:
  SubsystemLayout input_layout_;
  SubsystemLayout output_layout_;
  std::vector<std::pair<Ket, Ket>> pairs_;
  double span_tolerance_;
  ComplexMatrix input_gram_;
  double min_gram_eigenvalue_ = 0.0;
  bool degenerate_ = true;
};

/// The four machine outputs under the perfect-replication hypothesis, for
/// inputs (psi_i, P_j) in the order (1,1), (2,1), (1,2), (2,2). Each lives
/// on Bob's full post-replication register: original, program, replica of
/// the original, a fresh blank, replica of the program, a fresh program
/// blank, the output control, and any spare blanks.
struct ReplicationOutputs {
  Ket out_11;
  Ket out_21;
  Ket out_12;
  Ket out_22;
};

ReplicationOutputs replication_outputs(const ConstructorConfig& cfg);

/// The 4-pair extensional spec of the hypothetical machine on Bob's full
/// register. Inputs are psi_i (x) blank (x) P_j (x) blank (x) C (x) spares;
/// outputs replicate both registers and set the control according to
/// cfg.controls.policy. Raises DegenerateSpec when an overlap magnitude
/// reaches 1.
LinearMapSpec perfect_replication_map(const ConstructorConfig& cfg);

/// Apply the map to a ket in the span of its inputs. Coefficients come
/// from the input Gram system; a residual above span_tolerance * |k|
/// raises OutsideSpan.
Ket apply_map_spec(const LinearMapSpec& map, const Ket& k);

/// Apply the map to one party's factors of a joint state. The party's
/// factors must match the map's input layout dimension-by-dimension.
/// The result carries the other party's factors first (original order)
/// followed by the map's output factors, reassigned to the mapped party.
Ket apply_local_map(const Ket& joint, const LinearMapSpec& map, Party party);

/// D[i][j] = | <out_i|out_j> - <in_i|in_j> |. The map extends to an
/// isometry on its span iff every entry is (numerically) zero.
RealMatrix isometry_defect(const LinearMapSpec& map);

double max_entry(const RealMatrix& m);

/// The joint state after Bob runs the machine on his registers.
Ket post_replication_joint(const ConstructorConfig& cfg);

/// Alice's reduced state after Bob's replication (Raw convention),
/// computed by partial trace and cross-checked internally against the
/// dyad expansion with numerically computed machine-output overlaps.
DensityMatrix alice_reduced_after(const ConstructorConfig& cfg);

/// The dyad-expansion route to the same matrix: sixteen Alice dyads
/// weighted by the Gram entries of the four machine outputs. Kept as an
/// independently evaluable second path.
DensityMatrix alice_reduced_after_terms(const ConstructorConfig& cfg);

enum class Verdict { NoSignalling, Signalling, Degenerate };

const char* to_string(Verdict v);

/// Everything the comparison produces: Alice's reduced states before and
/// after in both trace conventions, the trace-distance gaps, the largest
/// Gram defect of the map, and the verdict. Degenerate configurations
/// (an overlap magnitude at 1) yield verdict Degenerate with no matrices.
struct SignallingReport {
  cplx s{};  // <psi1|psi2>
  cplx p{};  // <P1|P2>
  cplx c{};  // <C1|C2>
  std::optional<DensityMatrix> before_raw;
  std::optional<DensityMatrix> before_normalized;
  std::optional<DensityMatrix> after_raw;
  std::optional<DensityMatrix> after_normalized;
  double gap_raw = 0.0;
  double gap_norm = 0.0;
  double gram_defect_max = 0.0;
  Verdict verdict = Verdict::Degenerate;
};

SignallingReport signalling_gap(const ConstructorConfig& cfg);

/// The plain-cloning comparison: a single antisymmetrized pair shared with
/// Bob, one blank attached, and the 2-pair perfect-cloning map
/// psi_i (x) blank -> psi_i (x) psi_i applied on Bob's side.
SignallingReport no_cloning_gap(cplx overlap, std::size_t dim = 2);

} // namespace nogosig
