#include "nogosig/report.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "nogosig/errors.hpp"

namespace nogosig {

namespace {

std::string fmt(const char* spec, double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), spec, v);
  return buf.data();
}

std::string f5(double v) { return fmt("%.5f", v); }
std::string g17(double v) { return fmt("%.17g", v); }

} // namespace

const char* to_string(Convention c) {
  switch (c) {
    case Convention::Raw: return "raw";
    case Convention::Normalized: return "normalized";
    case Convention::Both: return "both";
  }
  return "?";
}

const char* to_string(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
  }
  return "?";
}

std::optional<ControlPolicy> parse_policy(const std::string& token) {
  if (token == "by-program") return ControlPolicy::ByProgram;
  if (token == "by-original") return ControlPolicy::ByOriginal;
  if (token == "fixed") return ControlPolicy::Fixed;
  return std::nullopt;
}

std::optional<Convention> parse_convention(const std::string& token) {
  if (token == "raw") return Convention::Raw;
  if (token == "normalized") return Convention::Normalized;
  if (token == "both") return Convention::Both;
  return std::nullopt;
}

std::optional<Format> parse_format(const std::string& token) {
  if (token == "text") return Format::Text;
  if (token == "json") return Format::Json;
  if (token == "csv") return Format::Csv;
  return std::nullopt;
}

GridSpec GridSpec::parse(const std::string& text) {
  GridSpec g;
  const std::size_t first = text.find(':');
  const std::size_t second =
      first == std::string::npos ? std::string::npos
                                 : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw Error(ErrorCode::Usage,
                "grid must be start:stop:step, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    g.start = std::stod(text.substr(0, first), &used);
    if (used != first) throw std::invalid_argument(text);
    std::string mid = text.substr(first + 1, second - first - 1);
    g.stop = std::stod(mid, &used);
    if (used != mid.size()) throw std::invalid_argument(text);
    std::string tail = text.substr(second + 1);
    g.step = std::stod(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Usage,
                "grid must be numeric start:stop:step, got '" + text + "'");
  }
  g.validate();
  return g;
}

void GridSpec::validate() const {
  if (!(step > 0.0)) {
    throw Error(ErrorCode::Usage, "grid step must be > 0");
  }
  if (start > stop) {
    throw Error(ErrorCode::Usage, "grid start must not exceed stop");
  }
}

std::vector<double> GridSpec::values() const {
  validate();
  const auto count =
      static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(start + static_cast<double>(i) * step);
  }
  return out;
}

void RunConfig::validate() const {
  auto check_unit_interval = [](double v, const char* name) {
    if (!(v >= 0.0) || !(v < 1.0)) {
      throw Error(ErrorCode::Usage,
                  std::string(name) + " must lie in [0, 1), got " +
                      std::to_string(v));
    }
  };
  check_unit_interval(s, "--s");
  check_unit_interval(p, "--p");
  check_unit_interval(c, "--c");
  if (qudit_dim < 2) {
    throw Error(ErrorCode::Usage, "--qudit-dim must be >= 2");
  }
  if (program_blanks < 1) {
    throw Error(ErrorCode::Usage, "--m must be >= 1");
  }
  if (total_blanks < 2 * (program_blanks + 1)) {
    throw Error(ErrorCode::Usage,
                "--n-blanks must be >= 2(m+1) = " +
                    std::to_string(2 * (program_blanks + 1)));
  }
  if (s_grid) s_grid->validate();
  if (p_grid) p_grid->validate();
  if (s_grid) {
    for (double v : s_grid->values()) check_unit_interval(v, "--s-grid value");
  }
  if (p_grid) {
    for (double v : p_grid->values()) check_unit_interval(v, "--p-grid value");
  }
}

ConstructorConfig RunConfig::constructor_config(double s_value,
                                                double p_value) const {
  ConstructorConfig cfg;
  cfg.qudit_dim = qudit_dim;
  cfg.program_blanks = program_blanks;
  cfg.total_blanks = total_blanks;
  cfg.controls = (c == 0.0)
                     ? ControlStates::orthogonal(policy)
                     : ControlStates::with_overlap(cplx{c, 0.0}, policy);
  cfg.overlaps = OverlapParameters{cplx{s_value, 0.0}, cplx{p_value, 0.0}};
  return cfg;
}

double closed_form_gap_norm(double s, double p, ControlPolicy policy) {
  // Normalized eigenvalues of the register carrying the squared overlap:
  // {(1+x)^2, 1+x^2} / (2(1+x+x^2)); the control-separated register keeps
  // the plain singlet-removal spectrum (1 +- x)/2.
  auto squared = [](double x) {
    const double denom = 2.0 * (1.0 + x + x * x);
    return std::array<double, 2>{(1.0 + x) * (1.0 + x) / denom,
                                 (1.0 + x * x) / denom};
  };
  auto plain = [](double x) {
    return std::array<double, 2>{(1.0 + x) / 2.0, (1.0 - x) / 2.0};
  };

  std::array<double, 2> a{}, b{};
  switch (policy) {
    case ControlPolicy::ByProgram:
      a = squared(s);
      b = plain(p);
      break;
    case ControlPolicy::ByOriginal:
      a = plain(s);
      b = squared(p);
      break;
    case ControlPolicy::Fixed:
      a = squared(s);
      b = squared(p);
      break;
  }
  double acc = 0.0;
  for (double x : a) {
    for (double y : b) {
      acc += std::abs(x * y - 0.25);
    }
  }
  return 0.5 * acc;
}

ScenarioReport run_scenario(const RunConfig& rc) {
  rc.validate();
  ScenarioReport report;
  report.policy = rc.policy;
  report.convention = rc.convention;
  report.core = signalling_gap(rc.constructor_config(rc.s, rc.p));
  if (rc.c == 0.0 && report.core.verdict != Verdict::Degenerate) {
    report.closed_form_gap_norm = closed_form_gap_norm(rc.s, rc.p, rc.policy);
  }
  return report;
}

SweepReport sweep_overlaps(const RunConfig& rc) {
  rc.validate();
  SweepReport report;
  report.policy = rc.policy;
  report.convention = rc.convention;
  const std::vector<double> s_values =
      rc.s_grid ? rc.s_grid->values() : std::vector<double>{rc.s};
  const std::vector<double> p_values =
      rc.p_grid ? rc.p_grid->values() : std::vector<double>{rc.p};
  report.rows.reserve(s_values.size() * p_values.size());
  for (double sv : s_values) {
    for (double pv : p_values) {
      report.rows.push_back(signalling_gap(rc.constructor_config(sv, pv)));
    }
  }
  return report;
}

namespace {

nlohmann::ordered_json row_json(const SignallingReport& r,
                                ControlPolicy policy,
                                const std::string& version) {
  nlohmann::ordered_json j;
  j["s"] = r.s.real();
  j["p"] = r.p.real();
  j["c"] = r.c.real();
  j["policy"] = to_string(policy);
  j["gap_raw"] = r.gap_raw;
  j["gap_norm"] = r.gap_norm;
  j["gram_defect_max"] = r.gram_defect_max;
  j["verdict"] = to_string(r.verdict);
  j["tool_version"] = version;
  return j;
}

std::string csv_row(const SignallingReport& r, ControlPolicy policy) {
  return g17(r.s.real()) + "," + g17(r.p.real()) + "," + g17(r.c.real()) +
         "," + to_string(policy) + "," + g17(r.gap_raw) + "," +
         g17(r.gap_norm) + "," + g17(r.gram_defect_max) + "," +
         to_string(r.verdict) + "\n";
}

constexpr const char* kCsvHeader =
    "s,p,c,policy,gap_raw,gap_norm,gram_defect_max,verdict\n";

void append_matrix(std::string& out, const DensityMatrix& m,
                   const std::string& title) {
  out += title + " (trace " + f5(m.trace()) + ", " +
         to_string(m.convention()) + "):\n";
  const std::size_t d = m.dim();
  for (std::size_t i = 0; i < d; ++i) {
    out += " ";
    for (std::size_t j = 0; j < d; ++j) {
      const cplx v = m.at(i, j);
      out += "  " + fmt("%9.5f", v.real());
      if (std::abs(v.imag()) >= 5e-6) {
        out += (v.imag() >= 0 ? "+" : "-") + f5(std::abs(v.imag())) + "i";
      }
    }
    out += "\n";
  }
}

void append_scalar(std::string& out, const char* name,
                   const std::string& value) {
  std::array<char, 96> buf{};
  std::snprintf(buf.data(), buf.size(), "  %-22s %s\n", name, value.c_str());
  out += buf.data();
}

std::string text_report(const ScenarioReport& report) {
  const SignallingReport& r = report.core;
  std::string out = "replication signalling report (tool ";
  out += report.tool_version;
  out += ")\n";
  append_scalar(out, "s  <psi1|psi2>", f5(r.s.real()));
  append_scalar(out, "p  <P1|P2>", f5(r.p.real()));
  append_scalar(out, "c  <C1|C2>", f5(r.c.real()));
  append_scalar(out, "policy", to_string(report.policy));
  append_scalar(out, "gap_raw", f5(r.gap_raw));
  append_scalar(out, "gap_norm", f5(r.gap_norm));
  append_scalar(out, "gram_defect_max", f5(r.gram_defect_max));
  append_scalar(out, "verdict", to_string(r.verdict));
  if (report.closed_form_gap_norm) {
    append_scalar(out, "gap_norm closed form",
                  f5(*report.closed_form_gap_norm));
  }
  const bool raw = report.convention != Convention::Normalized;
  const bool normalized = report.convention != Convention::Raw;
  if (raw && r.before_raw && r.after_raw) {
    append_matrix(out, *r.before_raw, "alice reduced state, before");
    append_matrix(out, *r.after_raw, "alice reduced state, after");
  }
  if (normalized && r.before_normalized && r.after_normalized) {
    append_matrix(out, *r.before_normalized,
                  "alice reduced state, before (normalized)");
    append_matrix(out, *r.after_normalized,
                  "alice reduced state, after (normalized)");
  }
  return out;
}

std::string text_sweep(const SweepReport& report) {
  std::string out = "replication signalling sweep (tool ";
  out += report.tool_version;
  out += ")\n";
  std::array<char, 160> buf{};
  std::snprintf(buf.data(), buf.size(), "%9s %9s %9s %12s %9s %9s %9s %s\n",
                "s", "p", "c", "policy", "gap_raw", "gap_norm", "defect",
                "verdict");
  out += buf.data();
  for (const SignallingReport& r : report.rows) {
    std::snprintf(buf.data(), buf.size(),
                  "%9.5f %9.5f %9.5f %12s %9.5f %9.5f %9.5f %s\n",
                  r.s.real(), r.p.real(), r.c.real(),
                  to_string(report.policy), r.gap_raw, r.gap_norm,
                  r.gram_defect_max, to_string(r.verdict));
    out += buf.data();
  }
  return out;
}

} // namespace

std::string render_report(const ScenarioReport& report, Format format) {
  switch (format) {
    case Format::Text:
      return text_report(report);
    case Format::Json: {
      nlohmann::ordered_json j =
          row_json(report.core, report.policy, report.tool_version);
      if (report.closed_form_gap_norm) {
        j["closed_form_gap_norm"] = *report.closed_form_gap_norm;
      }
      return j.dump(2) + "\n";
    }
    case Format::Csv:
      return std::string(kCsvHeader) + csv_row(report.core, report.policy);
  }
  throw Error(ErrorCode::Usage, "unknown report format");
}

std::string render_sweep(const SweepReport& report, Format format) {
  switch (format) {
    case Format::Text:
      return text_sweep(report);
    case Format::Json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const SignallingReport& r : report.rows) {
        rows.push_back(row_json(r, report.policy, report.tool_version));
      }
      return rows.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out = kCsvHeader;
      for (const SignallingReport& r : report.rows) {
        out += csv_row(r, report.policy);
      }
      return out;
    }
  }
  throw Error(ErrorCode::Usage, "unknown report format");
}

} // namespace nogosig
