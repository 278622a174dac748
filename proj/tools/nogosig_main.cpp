// nogosig: numerical comparison of a remote party's reduced density matrix
// before and after a hypothetical perfect self-replicating machine acts on
// the other party's share of an entangled state.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nogosig/errors.hpp"
#include "nogosig/report.hpp"

namespace {

using nogosig::RunConfig;

struct CliOptions {
  RunConfig rc;
  std::string policy = "by-program";
  std::string convention = "both";
  std::string format = "text";
  std::string out_path;
  std::string s_grid;
  std::string p_grid;
};

void add_common_flags(CLI::App& cmd, CliOptions& opt) {
  cmd.add_option("--s", opt.rc.s, "Overlap <psi1|psi2>, in [0,1)");
  cmd.add_option("--p", opt.rc.p, "Overlap <P1|P2>, in [0,1)");
  cmd.add_option("--c", opt.rc.c, "Control output overlap <C1|C2>, in [0,1)");
  cmd.add_option("--policy", opt.policy,
                 "Output control assignment: by-program|by-original|fixed");
  cmd.add_option("--n-blanks", opt.rc.total_blanks, "Total blank states n");
  cmd.add_option("--m", opt.rc.program_blanks,
                 "Blanks consumed by the program copy (m)");
  cmd.add_option("--qudit-dim", opt.rc.qudit_dim, "Qudit dimension N");
  cmd.add_option("--convention", opt.convention,
                 "Reduced states to show: raw|normalized|both");
  cmd.add_option("--format", opt.format, "Output format: text|json|csv");
  cmd.add_option("--out", opt.out_path, "Write the report to this file");
}

RunConfig finalize(const CliOptions& opt) {
  RunConfig rc = opt.rc;
  if (auto p = nogosig::parse_policy(opt.policy)) {
    rc.policy = *p;
  } else {
    throw nogosig::Error(nogosig::ErrorCode::Usage,
                         "unknown policy '" + opt.policy + "'");
  }
  if (auto c = nogosig::parse_convention(opt.convention)) {
    rc.convention = *c;
  } else {
    throw nogosig::Error(nogosig::ErrorCode::Usage,
                         "unknown convention '" + opt.convention + "'");
  }
  if (auto f = nogosig::parse_format(opt.format)) {
    rc.format = *f;
  } else {
    throw nogosig::Error(nogosig::ErrorCode::Usage,
                         "unknown format '" + opt.format + "'");
  }
  if (!opt.out_path.empty()) {
    rc.output_path = opt.out_path;
  }
  if (!opt.s_grid.empty()) {
    rc.s_grid = nogosig::GridSpec::parse(opt.s_grid);
  }
  if (!opt.p_grid.empty()) {
    rc.p_grid = nogosig::GridSpec::parse(opt.p_grid);
  }
  rc.validate();
  return rc;
}

int emit(const RunConfig& rc, const std::string& text) {
  if (rc.output_path) {
    std::ofstream file(*rc.output_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open '" << *rc.output_path
                << "' for writing\n";
      return 1;
    }
    file << text;
    return file.good() ? 0 : 1;
  }
  std::cout << text;
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantifies whether a perfect self-replicating machine acting on one "
      "half of an entangled state would change the remote reduced density "
      "matrix."};
  app.require_subcommand(1);

  CliOptions run_opt;
  CLI::App* run = app.add_subcommand(
      "run", "Evaluate a single (s, p, c) scenario");
  add_common_flags(*run, run_opt);

  CliOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Evaluate a grid of (s, p) scenarios");
  add_common_flags(*sweep, sweep_opt);
  sweep->add_option("--s-grid", sweep_opt.s_grid,
                    "s grid as start:stop:step (inclusive)");
  sweep->add_option("--p-grid", sweep_opt.p_grid,
                    "p grid as start:stop:step (inclusive)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const RunConfig rc = finalize(run_opt);
      return emit(rc, nogosig::render_report(nogosig::run_scenario(rc),
                                             rc.format));
    }
    const RunConfig rc = finalize(sweep_opt);
    return emit(rc, nogosig::render_sweep(nogosig::sweep_overlaps(rc),
                                          rc.format));
  } catch (const nogosig::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == nogosig::ErrorCode::Usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
