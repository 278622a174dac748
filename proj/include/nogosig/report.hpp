#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nogosig/replication.hpp"

namespace nogosig {

enum class Convention { Raw, Normalized, Both };
enum class Format { Text, Json, Csv };

const char* to_string(Convention c);
const char* to_string(Format f);

std::optional<ControlPolicy> parse_policy(const std::string& token);
std::optional<Convention> parse_convention(const std::string& token);
std::optional<Format> parse_format(const std::string& token);

/// Inclusive arithmetic progression start, start+step, ..., <= stop.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  /// Parses "start:stop:step"; throws Usage on malformed input.
  static GridSpec parse(const std::string& text);

  void validate() const;
  std::vector<double> values() const;
};

/// One CLI invocation's worth of parameters.
struct RunConfig {
  double s = 0.0;
  double p = 0.0;
  double c = 0.0;
  ControlPolicy policy = ControlPolicy::ByProgram;
  std::size_t qudit_dim = 2;       // N
  std::size_t program_blanks = 1;  // m
  std::size_t total_blanks = 4;    // n
  Convention convention = Convention::Both;
  Format format = Format::Text;
  std::optional<std::string> output_path;
  std::optional<GridSpec> s_grid;
  std::optional<GridSpec> p_grid;

  void validate() const;  // throws Usage
  ConstructorConfig constructor_config(double s_value, double p_value) const;
};

/// Single-point report: the signalling comparison plus rendering context
/// and, when the control outputs are orthogonal, the closed-form gap the
/// factored eigenvalue structure predicts.
struct ScenarioReport {
  SignallingReport core;
  ControlPolicy policy = ControlPolicy::ByProgram;
  Convention convention = Convention::Both;
  std::optional<double> closed_form_gap_norm;
  std::string tool_version = kToolVersion;
};

struct SweepReport {
  std::vector<SignallingReport> rows;  // row-major: s outer, p inner
  ControlPolicy policy = ControlPolicy::ByProgram;
  Convention convention = Convention::Both;
  std::string tool_version = kToolVersion;
};

ScenarioReport run_scenario(const RunConfig& rc);
SweepReport sweep_overlaps(const RunConfig& rc);

/// Normalized-gap closed form for orthogonal control outputs (c = 0),
/// valid for real overlaps. Policy decides which register keeps the
/// replica-squared cross terms.
double closed_form_gap_norm(double s, double p, ControlPolicy policy);

std::string render_report(const ScenarioReport& report, Format format);
std::string render_sweep(const SweepReport& report, Format format);

} // namespace nogosig
