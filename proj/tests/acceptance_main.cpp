// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Tolerances are pinned in code next to each check.

#include <sys/resource.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nogosig/eig.hpp"
#include "nogosig/replication.hpp"
#include "nogosig/report.hpp"
#include "nogosig/scenario.hpp"
#include "nogosig/tensor_ops.hpp"

using namespace nogosig;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752;
const std::array<double, 5> kGrid = {0.0, 0.3, 0.5, kInvSqrt2, 0.9};

int g_failures = 0;

void report(int number, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", number,
              detail.c_str());
  if (!pass) {
    ++g_failures;
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double frobenius(const DensityMatrix& a, const DensityMatrix& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    acc += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(acc);
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

// --- criterion 1: pre-replication reduced state, two routes agree -------

void criterion_1() {
  const double t0 = now_seconds();
  double worst = 0.0;
  for (double s : kGrid) {
    for (double p : kGrid) {
      const ConstructorConfig cfg = ConstructorConfig::desk_default(s, p);
      const DensityMatrix reference = alice_reduced_reference(cfg);
      const DensityMatrix traced = partial_trace(
          density_from_ket(build_joint_state(cfg)), {kPsiAlice, kProgAlice});
      worst = std::max(worst, frobenius(reference, traced));
    }
  }
  const double elapsed = now_seconds() - t0;
  const bool pass = worst <= 1e-10 && elapsed < 5.0;
  report(1, pass,
         "pre-replication reduced state: dyad expansion vs partial trace, "
         "max Frobenius " + fmt(worst) + " (tol 1e-10), " + fmt(elapsed) +
             " s (limit 5 s)");
}

// --- criterion 2: post-replication reduced state, two routes agree ------

void criterion_2() {
  double worst = 0.0;
  for (double s : kGrid) {
    for (double p : kGrid) {
      const ConstructorConfig cfg = ConstructorConfig::desk_default(s, p);
      const DensityMatrix traced = partial_trace(
          density_from_ket(post_replication_joint(cfg)),
          {kPsiAlice, kProgAlice});
      const DensityMatrix dyads = alice_reduced_after_terms(cfg);
      worst = std::max(worst, frobenius(traced, dyads));
    }
  }
  const bool pass = worst <= 1e-10;
  report(2, pass,
         "post-replication reduced state: partial trace vs machine-output "
         "dyad expansion, max Frobenius " + fmt(worst) + " (tol 1e-10)");
}

// --- criterion 3: dichotomy plus the pinned desk-default gap ------------

void criterion_3() {
  const double zero_gap =
      signalling_gap(ConstructorConfig::desk_default(0.0, 0.0)).gap_norm;
  bool dichotomy = zero_gap <= 1e-12;
  double min_positive = 1.0;
  for (double s : kGrid) {
    for (double p : kGrid) {
      if (s < 0.3 || p < 0.3) continue;
      const double gap =
          signalling_gap(ConstructorConfig::desk_default(s, p)).gap_norm;
      min_positive = std::min(min_positive, gap);
      dichotomy = dichotomy && gap > 1e-3;
    }
  }
  const double pinned =
      signalling_gap(ConstructorConfig::desk_default(kInvSqrt2, kInvSqrt2))
          .gap_norm;
  const bool pinned_ok = std::abs(pinned - 0.47855) <= 1e-5;
  report(3, dichotomy && pinned_ok,
         "dichotomy gap(0,0)=" + fmt(zero_gap) +
             " (tol 1e-12), min gap over s,p>=0.3 is " + fmt(min_positive) +
             " (must exceed 1e-3); pinned gap(0.70711,0.70711)=" +
             fmt(pinned) + " vs expected 0.47855 +- 1e-5" +
             (pinned_ok ? "" : " <- the map's same-control output overlaps"
                               " (s^2 terms) shift the exact value"));
}

// --- criterion 4: closed-form gap law over the grid ----------------------

void criterion_4() {
  double worst = 0.0;
  double worst_s = 0.0, worst_p = 0.0;
  for (double s : kGrid) {
    for (double p : kGrid) {
      const double gap =
          signalling_gap(ConstructorConfig::desk_default(s, p)).gap_norm;
      double law = 0.0;
      for (double a : {1.0, -1.0}) {
        for (double b : {1.0, -1.0}) {
          law += std::abs((1 + a * s) * (1 + b * p) / 4.0 - 0.25);
        }
      }
      law *= 0.5;
      if (std::abs(gap - law) > worst) {
        worst = std::abs(gap - law);
        worst_s = s;
        worst_p = p;
      }
    }
  }
  const bool pass = worst <= 1e-10;
  report(4, pass,
         "closed-form law (1/2) sum |(1+-s)(1+-p)/4 - 1/4|: max deviation " +
             fmt(worst) + " at s=" + fmt(worst_s) + ", p=" + fmt(worst_p) +
             " (tol 1e-10)" +
             (pass ? "" : " <- the law ignores the surviving same-control"
                          " cross terms of the mapped state"));
}

// --- criterion 5: Gram-defect law ----------------------------------------

void criterion_5() {
  double worst = 0.0;
  for (double s : kGrid) {
    for (double p : kGrid) {
      if (s >= 1.0 || p >= 1.0) continue;
      const ConstructorConfig cfg = ConstructorConfig::desk_default(s, p);
      const RealMatrix defect = isometry_defect(perfect_replication_map(cfg));
      const double c = 0.0;
      const double ds = std::abs(s - s * s);
      const double dp = std::abs(p - p * p * c);
      const double dsp = std::abs(s * p - s * s * p * p * c);
      const double expected[4][4] = {{0, ds, dp, dsp},
                                     {ds, 0, dsp, dp},
                                     {dp, dsp, 0, ds},
                                     {dsp, dp, ds, 0}};
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          worst = std::max(worst,
                           std::abs(defect.at(i, j) - expected[i][j]));
        }
      }
    }
  }
  const double max_defect =
      max_entry(isometry_defect(perfect_replication_map(
          ConstructorConfig::desk_default(kInvSqrt2, kInvSqrt2))));
  const bool pass =
      worst <= 1e-10 && std::abs(max_defect - kInvSqrt2) <= 1e-10;
  report(5, pass,
         "Gram-defect law |s-s^2|, |p-p^2 c|, |sp-s^2 p^2 c|: max pattern "
         "deviation " + fmt(worst) + " (tol 1e-10); max defect at "
         "s=p=0.70711 is " + fmt(max_defect) + " vs 0.70711 +- 1e-10");
}

// --- criterion 6: cloning comparison --------------------------------------

void criterion_6() {
  double worst = 0.0;
  std::string detail;
  for (double s : {0.0, 0.25, 0.5, kInvSqrt2}) {
    const double gap = no_cloning_gap(s).gap_norm;
    const double deviation = std::abs(gap - s / 2.0);
    worst = std::max(worst, deviation);
    detail += " gap(" + fmt(s) + ")=" + fmt(gap);
  }
  const bool pass = worst <= 1e-10;
  report(6, pass,
         "cloning gap vs s/2 (tol 1e-10): max deviation " + fmt(worst) + ";" +
             detail +
             (pass ? "" : " <- exact linear extension gives"
                          " s/(2(1+s+s^2)); the replica pair is not"
                          " orthogonal, so s/2 presumes an overlap the"
                          " trace does not produce"));
}

// --- criterion 7: randomized property suite -------------------------------

void criterion_7() {
  std::mt19937_64 rng(918273645);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const SubsystemLayout layout223({Factor{"x", 2}, Factor{"y", 2},
                                   Factor{"z", 3}});

  auto random_amps = [&](std::size_t n) {
    std::vector<cplx> v(n);
    for (cplx& x : v) x = cplx{unit(rng), unit(rng)};
    return v;
  };
  auto random_ket = [&](const SubsystemLayout& l) {
    return Ket(l, random_amps(l.total_dim()));
  };

  // trace preservation under partial trace
  double worst_trace = 0.0;
  const std::vector<std::vector<std::string>> keeps = {
      {"x"}, {"y"}, {"z"}, {"x", "y"}, {"x", "z"}, {"y", "z"}, {}};
  for (int rep = 0; rep < 1000; ++rep) {
    const DensityMatrix rho = density_from_ket(random_ket(layout223));
    const auto& keep = keeps[rep % keeps.size()];
    const DensityMatrix out =
        partial_trace(rho, std::span<const std::string>(keep));
    worst_trace = std::max(worst_trace, std::abs(out.trace() - rho.trace()));
  }
  const bool trace_ok = worst_trace <= 1e-12;

  // Hermiticity and positive semidefiniteness of produced densities
  double worst_herm = 0.0, worst_psd = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const DensityMatrix rho =
        partial_trace(density_from_ket(random_ket(layout223)),
                      {std::string("x"), std::string("z")});
    const std::size_t d = rho.dim();
    ComplexMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        m.at(i, j) = rho.at(i, j);
        worst_herm = std::max(
            worst_herm, std::abs(rho.at(i, j) - std::conj(rho.at(j, i))));
      }
    }
    worst_psd = std::max(worst_psd, -min_eigenvalue(m));
  }
  const bool herm_ok = worst_herm <= 1e-10 && worst_psd <= 1e-10;

  // trace-distance metric axioms
  const SubsystemLayout layout4({Factor{"q", 4}});
  double worst_metric = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const DensityMatrix a = density_from_ket(random_ket(layout4));
    const DensityMatrix b = density_from_ket(random_ket(layout4));
    const DensityMatrix c = density_from_ket(random_ket(layout4));
    const double dab = trace_distance(a, b);
    const double dba = trace_distance(b, a);
    const double tri =
        dab - (trace_distance(a, c) + trace_distance(c, b));
    worst_metric = std::max({worst_metric, -dab, std::abs(dab - dba), tri});
  }
  const bool metric_ok = worst_metric <= 1e-10;

  // permutation round trips, bit exact
  bool perm_ok = true;
  for (int rep = 0; rep < 1000 && perm_ok; ++rep) {
    const Ket k = random_ket(layout223);
    std::vector<std::size_t> perm = {0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> inverse(3);
    for (std::size_t i = 0; i < 3; ++i) inverse[perm[i]] = i;
    const Ket back = permute_factors(permute_factors(k, perm), inverse);
    for (std::size_t i = 0; i < k.dim(); ++i) {
      if (!(back[i] == k[i])) {
        perm_ok = false;
        break;
      }
    }
  }

  // isometric local maps leave the normalized remote marginal unchanged
  double worst_iso = 0.0;
  const SubsystemLayout ab({Factor{"A", 3, Party::Alice},
                            Factor{"B", 2, Party::Bob}});
  const SubsystemLayout bq = single_factor("b", 2);
  for (int rep = 0; rep < 1000; ++rep) {
    const Ket u0 = normalize(random_ket(bq));
    const Ket seed = random_ket(bq);
    const cplx ov = inner_product(u0, seed);
    const Ket u1 = normalize(
        Ket(bq, {seed[0] - ov * u0[0], seed[1] - ov * u0[1]}));
    std::vector<std::pair<Ket, Ket>> pairs;
    pairs.emplace_back(Ket::basis(bq, 0), u0);
    pairs.emplace_back(Ket::basis(bq, 1), u1);
    const LinearMapSpec iso(bq, bq, std::move(pairs));
    const Ket joint = random_ket(ab);
    const DensityMatrix before =
        normalize_density(partial_trace(density_from_ket(joint), {"A"}));
    const DensityMatrix after = normalize_density(partial_trace(
        density_from_ket(apply_local_map(joint, iso, Party::Bob)), {"A"}));
    worst_iso = std::max(worst_iso, trace_distance(before, after));
  }
  const bool iso_ok = worst_iso <= 1e-10;

  const bool pass = trace_ok && herm_ok && metric_ok && perm_ok && iso_ok;
  report(7, pass,
         "1000-case properties: trace preservation " + fmt(worst_trace) +
             " (tol 1e-12); Hermiticity " + fmt(worst_herm) + " / PSD " +
             fmt(worst_psd) + " (tol 1e-10); metric axioms " +
             fmt(worst_metric) + " (tol 1e-10); permutation round trips " +
             (perm_ok ? "exact" : "NOT exact") + "; isometric local maps " +
             fmt(worst_iso) + " (tol 1e-10)");
}

// --- criterion 8: resource envelope ---------------------------------------

std::size_t peak_memory_kb() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) == 0 && usage.ru_maxrss > 0) {
    return static_cast<std::size_t>(usage.ru_maxrss);  // KB on Linux
  }
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmPeak:", 0) == 0) {
      std::istringstream ss(line.substr(7));
      std::size_t kb = 0;
      ss >> kb;
      return kb;
    }
  }
  return 0;
}

void criterion_8(double elapsed) {
  const std::size_t kb = peak_memory_kb();
  const bool time_ok = elapsed < 60.0;
  const bool mem_ok = kb == 0 || kb < 500 * 1024;
  report(8, time_ok && mem_ok,
         "resource envelope: " + fmt(elapsed) + " s (limit 60 s), peak " +
             (kb == 0 ? std::string("unknown")
                      : fmt(static_cast<double>(kb) / 1024.0) + " MB") +
             " (limit 500 MB)");
}

} // namespace

int main() {
  now_seconds();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8(now_seconds());

  std::printf("%d of 8 criteria passed\n", 8 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
