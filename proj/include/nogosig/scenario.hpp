#pragma once

#include <string>
#include <utility>

#include "nogosig/state.hpp"
#include "nogosig/tensor_ops.hpp"

namespace nogosig {

/// Overlaps of the two non-orthogonal state families: <psi1|psi2> for the
/// originals and <P1|P2> for the program states. Magnitudes must not
/// exceed 1.
struct OverlapParameters {
  cplx original = 0.0;
  cplx program = 0.0;

  void validate() const;
};

enum class ControlPolicy { ByProgram, ByOriginal, Fixed };

const char* to_string(ControlPolicy p);

/// Control register states: the input control and the two output controls
/// the machine may leave behind. All unit kets of the same dimension.
struct ControlStates {
  std::size_t dim = 3;
  Ket input;
  Ket output_first;
  Ket output_second;
  ControlPolicy policy = ControlPolicy::ByProgram;

  /// <C1|C2>, the only control overlap entering any reduced state.
  cplx output_overlap() const { return inner_product(output_first, output_second); }

  void validate() const;

  /// Desk default: the three orthonormal basis kets of a 3-dim register.
  static ControlStates orthogonal(ControlPolicy policy = ControlPolicy::ByProgram,
                                  std::size_t dim = 3);

  /// Output controls with <C1|C2> = overlap; the input control stays
  /// orthogonal to both. Requires dim >= 3.
  static ControlStates with_overlap(cplx overlap,
                                    ControlPolicy policy = ControlPolicy::ByProgram,
                                    std::size_t dim = 3);
};

/// Full machine configuration: qudit dimension N, program register built
/// from m blanks (K = N^m), n blank states in total, control register and
/// the two overlap parameters.
struct ConstructorConfig {
  std::size_t qudit_dim = 2;       // N
  std::size_t program_blanks = 1;  // m
  std::size_t total_blanks = 4;    // n
  ControlStates controls = ControlStates::orthogonal();
  OverlapParameters overlaps;

  std::size_t program_dim() const;       // K = N^m
  std::size_t blank_space_dim() const;   // M = N^n
  /// Blanks left over after one replication round: n - 2(m+1).
  std::size_t spare_blanks_after() const;

  void validate() const;

  static ConstructorConfig desk_default(cplx original_overlap,
                                        cplx program_overlap,
                                        ControlPolicy policy = ControlPolicy::ByProgram);
};

/// Unit kets (v1, v2) over a dim-dimensional register with
/// <v1|v2> = overlap: v1 is the first basis ket, v2 mixes in the second.
/// |overlap| = 1 is allowed here (identical states) and only rejected by
/// the antisymmetrizing constructors downstream.
std::pair<Ket, Ket> make_nonorthogonal_pair(std::size_t dim, cplx overlap);

/// (1/sqrt2)(v1 (x) v2 - v2 (x) v1) with factor parties (Alice, Bob).
/// For unit inputs the squared norm is 1 - |<v1|v2>|^2. Parallel inputs
/// annihilate and raise DegeneratePair.
Ket build_singlet_like(const Ket& v1, const Ket& v2,
                       std::string alice_label = "a",
                       std::string bob_label = "b",
                       Role role = Role::Generic);

/// The shared pre-replication state: antisymmetrized original pair tensored
/// with the antisymmetrized program pair, factors ordered
/// [psi_a, prog_a, psi_b, prog_b]. Squared norm (1-|s|^2)(1-|p|^2).
Ket build_joint_state(const ConstructorConfig& cfg);

/// Appends Bob's working registers to the joint state: one blank copy
/// target for the original, the program copy target (one K-dim register),
/// the input control, and the remaining n-(m+1) spare blanks.
Ket attach_ancilla(const Ket& joint, const ConstructorConfig& cfg);

/// Alice's pre-replication reduced state assembled term by term from the
/// sixteen dyads weighted by the overlap parameters (Raw convention),
/// independent of the partial-trace path.
DensityMatrix alice_reduced_reference(const ConstructorConfig& cfg);

// Factor labels used by the scenario builders.
inline constexpr const char* kPsiAlice = "psi_a";
inline constexpr const char* kProgAlice = "prog_a";
inline constexpr const char* kPsiBob = "psi_b";
inline constexpr const char* kProgBob = "prog_b";
inline constexpr const char* kBlankBob = "blank_b";
inline constexpr const char* kProgBlankBob = "pblank_b";
inline constexpr const char* kControlBob = "ctrl_b";

} // namespace nogosig
