// SPDX-License-Identifier: Apache-2.0
// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lerch/catalog.hpp"
#include "lerch/cli.hpp"
#include "lerch/random.hpp"
#include "lerch/specfun.hpp"
#include "lerch/verify.hpp"

using namespace lerch;

namespace {

// Pinned tolerances.
constexpr double kSweepTol = 1e-8;       // criteria 1, 2
constexpr double kSweepSeconds = 10.0;   // criterion 1 runtime
constexpr double kEntryTol = 1e-8;       // criteria 3, 4
constexpr double kChainTol = 1e-10;      // criterion 5
constexpr double kReflectionTol = 1e-11;
constexpr double kHurwitzRecTol = 1e-10;
constexpr double kGlaisher = 1.2824271291;
constexpr double kGlaisherTol = 1e-9;    // criterion 7
constexpr double kBranchEstTol = 1e-8;   // criterion 8
constexpr int kPropertySamples = 200;    // criterion 6
constexpr double kApery = 1.2020569031595942854;

struct Line {
  bool ok;
  std::string detail;
};

double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

ParamSet nml(Complex n, Complex m, Complex l, Complex k = 0.0, Complex a = 1.0) {
  ParamSet p;
  p.n = n;
  p.m = m;
  p.l = l;
  p.k = k;
  p.a = a;
  return p;
}

Line sweep_line(const std::string& id, std::vector<BoxEntry> box, double margin, double* seconds) {
  SweepSpec spec;
  spec.entry_id = id;
  spec.count = 20;
  spec.seed = 42;
  spec.tol = kSweepTol;
  spec.box = std::move(box);
  spec.margin = margin;
  auto t0 = std::chrono::steady_clock::now();
  SweepResult r = sweep(spec);
  *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = r.summary.pass == 20 && r.summary.max_rel_residual <= kSweepTol;
  return {ok, std::to_string(r.summary.pass) + "/20 pass, max rel residual " + fmt("%.2e", r.summary.max_rel_residual) +
                  ", " + fmt("%.2f", *seconds) + " s"};
}

Line criterion1() {
  double s = 0;
  // n, m in (0, l - 0.6): the strip Re(n) < l - 1/2 shrunk by the 0.1 margin
  Line l = sweep_line("grad-3.244.4",
                      {{"n", {0.0, 3.4, 0, 0, false}}, {"m", {0.0, 3.4, 0, 0, false}}, {"l", {1.5, 4.0, 0, 0, false}}},
                      0.1, &s);
  l.ok = l.ok && s < kSweepSeconds;
  return l;
}

Line criterion2() {
  double s = 0;
  return sweep_line("log-csc2", {}, -1.0, &s);
}

Line criterion3() {
  int count = 0, passed = 0;
  double worst = 0;
  auto run = [&](const char* id, const ParamSet& p) {
    VerificationReport r = verify_entry(id, p, kEntryTol);
    ++count;
    // n = 3, m = 2 is an exact zero; the verdict then bounds the absolute residual
    bool zero = std::abs(r.rhs) < kNearZeroRhs;
    if (r.verdict == Verdict::pass && (zero || r.rel_residual <= kEntryTol)) ++passed;
    if (!zero) worst = std::max(worst, r.rel_residual);
  };
  for (double n : {3.0, 4.0, 5.0}) {
    ParamSet p;
    p.n = n;
    run("grad-4.235.1", p);
    run("grad-4.235.3", p);
    for (double m : {1.0, 2.0}) {
      p.m = m;
      run("grad-4.235.2", p);
    }
  }
  return {passed == count, std::to_string(passed) + "/" + std::to_string(count) + " pass, max rel residual " +
                               fmt("%.2e", worst)};
}

Line criterion4() {
  int passed = 0;
  double worst = 0;
  const char* ids[] = {"log-denominator-ex1-log", "log-denominator-ex2-log", "log-denominator-ex2-plain",
                       "log-denominator-ex3-plain"};
  for (const char* id : ids) {
    VerificationReport r = verify_entry(id, find_entry(id).defaults.front(), kEntryTol);
    if (r.verdict == Verdict::pass && r.rel_residual <= kEntryTol) ++passed;
    worst = std::max(worst, r.rel_residual);
  }
  // The ex2 constant written out independently of the catalog.
  const double s3 = std::sqrt(3.0);
  double ex2 = (-kPi + 24.0 * std::log(2.0) - 6.0 * s3 * std::log(2.0 + s3)) / 96.0;
  VerificationReport r =
      verify_entry("log-denominator-ex2-log", find_entry("log-denominator-ex2-log").defaults.front(), kEntryTol);
  double lit = rel(r.lhs, ex2);
  bool ok = passed == 4 && lit <= kEntryTol;
  return {ok, std::to_string(passed) + "/4 pass, max rel residual " + fmt("%.2e", worst) +
                  ", ex2 lhs vs written constant " + fmt("%.2e", lit)};
}

Line criterion5() {
  double worst = 0;
  int checks = 0;
  auto track = [&](Complex got, Complex want) {
    worst = std::max(worst, rel(got, want));
    ++checks;
  };
  SweepSpec spec;
  spec.entry_id = "log-squared-trig";
  spec.count = 50;
  spec.seed = 3;
  for (ParamSet p : sweep_samples(spec)) {
    for (int k = 0; k <= 3; ++k) {
      p.k = k;
      Complex m = closed_form("master", p);
      track(std::pow(2.0, k) * closed_form("polylog-form", p), m);
      if (k == 0) track(closed_form("grad-3.244.4", p), m);
      if (k == 1) track(closed_form("log-csc2", p), m);
      if (k == 2) track(4.0 * closed_form("log-squared-trig", p), m);
    }
  }
  for (double n : {3.0, 4.0, 5.0}) {
    ParamSet p;
    p.n = n;
    track(closed_form("grad-4.235.1", p), -0.5 * closed_form("log-csc2", nml((n - 2) / 2, (n - 1) / 2, n)));
    track(closed_form("grad-4.235.3", p), 0.5 * closed_form("log-csc2", nml((n - 1) / 2, (n - 3) / 2, n)));
  }
  return {worst <= kChainTol, std::to_string(checks) + " identities, max rel deviation " + fmt("%.2e", worst)};
}

Line criterion6() {
  SplitMix64 g(20261015);
  int bad = 0, total = 0;
  auto box = [&](double a, double b, double c, double d) { return Complex{g.uniform(a, b), g.uniform(c, d)}; };
  auto lerch_rec = [&](const LerchArgs& a) {
    EvalResult p0 = lerch_phi(a);
    EvalResult p1 = lerch_phi({a.z, a.s, a.v + 1.0});
    Complex resid = p0.value - cpow_principal(a.v, -a.s) - a.z * p1.value;
    ++total;
    if (!(std::abs(resid) <= 4.0 * (p0.est_error + p1.est_error))) ++bad;
  };
  for (int i = 0; i < kPropertySamples; ++i) {
    Complex z;
    do z = box(-0.99, 0.99, -0.99, 0.99);
    while (std::abs(z) > 0.99);
    lerch_rec({z, box(-3.0, 4.0, -2.0, 2.0), box(0.1, 6.0, -2.0, 2.0)});
  }
  for (int i = 0; i < kPropertySamples; ++i) {
    Complex z = std::polar(g.uniform(0.2, 2.0), g.uniform(0.3, 2.0 * kPi - 0.3));
    lerch_rec({z, -std::floor(g.uniform(0.0, 9.0)), box(0.1, 4.0, -2.0, 2.0)});
  }
  for (int i = 0; i < kPropertySamples; ++i)
    lerch_rec({std::polar(1.0, g.uniform(0.2, 2.0 * kPi - 0.2)), box(0.1, 4.0, -2.0, 2.0), box(0.1, 6.0, -2.0, 2.0)});

  for (int i = 0; i < kPropertySamples; ++i) {
    Complex s;
    do s = box(-20.0, 20.0, -20.0, 20.0);
    while (std::abs(s) > 20.0 || std::abs(s - 1.0) < 0.05);
    Complex v = box(0.1, 20.0, -5.0, 5.0);
    Complex a = hurwitz_zeta(s, v).value, b = hurwitz_zeta(s, v + 1.0).value, t = cpow_principal(v, -s);
    ++total;
    if (!(std::abs(a - b - t) <= kHurwitzRecTol * std::max({std::abs(a), std::abs(b), std::abs(t)}))) ++bad;
  }

  auto agree = [](const EvalResult& a, const EvalResult& b) {
    double slack = 64.0 * 2.2e-16 * (std::abs(a.value) + std::abs(b.value));
    return std::abs(a.value - b.value) <= a.est_error + b.est_error + slack;
  };
  for (int i = 0; i < kPropertySamples; ++i) {
    LerchArgs a{std::polar(1.0, g.uniform(0.2, 2.0 * kPi - 0.2)), box(0.2, 3.0, -1.0, 1.0), box(0.2, 5.0, -1.0, 1.0)};
    ++total;
    if (!agree(lerch_phi_via(Strategy::conditional_series, a), lerch_phi_via(Strategy::integral_rep, a))) ++bad;
  }
  for (int i = 0; i < kPropertySamples; ++i) {
    Complex z;
    do z = box(-0.95, 0.95, -0.95, 0.95);
    while (std::abs(z) > 0.95);
    LerchArgs a{z, box(0.2, 3.0, -1.0, 1.0), box(0.2, 5.0, -1.0, 1.0)};
    ++total;
    if (!agree(lerch_phi_via(Strategy::series, a), lerch_phi_via(Strategy::integral_rep, a))) ++bad;
  }

  for (int checked = 0; checked < kPropertySamples;) {
    Complex s = box(-10.0, 10.0, -10.0, 10.0);
    if (std::abs(s) > 10.0 || std::abs(s.imag()) < 1e-3) continue;
    Complex lhs = lerch::gamma(s) * lerch::gamma(1.0 - s) * std::sin(kPi * s) / kPi;
    ++total;
    ++checked;
    if (!(std::abs(lhs - 1.0) <= kReflectionTol)) ++bad;
  }

  // cot(x) = -2i sum_{y>=0} e^{2ix(y+1)} - i, convergent for Im(x) > 0.
  for (int i = 0; i < kPropertySamples; ++i) {
    Complex x{g.uniform(-3.0, 3.0), g.uniform(0.1, 2.0)};
    Complex q = std::exp(2.0 * kI * x), qp = 1.0, sum = 0.0;
    const int N = 200;
    for (int y = 0; y < N; ++y) sum += (qp *= q);
    Complex cot = std::cos(x) / std::sin(x);
    double bound = 2.0 * std::pow(std::abs(q), N + 1) / std::abs(1.0 - q);
    ++total;
    if (!(std::abs(-2.0 * kI * sum - kI - cot) <= bound + 1e-13 * (1.0 + std::abs(cot)) / std::abs(1.0 - q))) ++bad;
  }
  return {bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " samples over 8 suites"};
}

Line criterion7() {
  double a = glaisher();
  double via = std::exp(1.0 / 12.0 - hurwitz_zeta_sderiv(-1.0, 1.0).value.real());
  bool ok = std::abs(a - kGlaisher) <= kGlaisherTol && std::abs(via - kGlaisher) <= kGlaisherTol;
  return {ok, "A = " + fmt("%.12f", a)};
}

Line criterion8() {
  const char* ids[] = {"nested-log", "log-log-zeta-ex1", "log-log-zeta-ex2", "log-log-zeta-ex3",
                       "log-trig-four-power"};
  std::string detail;
  bool ok = true;
  for (const char* id : ids) {
    const CatalogEntry& e = find_entry(id);
    for (const ParamSet& p : e.defaults) {
      VerificationReport r = verify_entry(id, p);
      bool converged = r.lhs_diag.converged && r.lhs_diag.est_error <= kBranchEstTol;
      bool definitive = r.verdict == Verdict::pass || r.verdict == Verdict::discrepancy_documented;
      ok = ok && converged && definitive;
      if (!converged || !definitive) detail += std::string(id) + " " + std::string(to_string(r.verdict)) + "; ";
    }
  }
  VerificationReport ex1 = verify_entry("log-log-zeta-ex1", find_entry("log-log-zeta-ex1").defaults.front());
  double want = -7.0 * kPi * kApery / 16.0;
  detail += "ex1 Im(lhs) " + fmt("%.15f", ex1.lhs.imag()) + " vs -7 pi zeta(3)/16 = " + fmt("%.15f", want) +
            " (diff " + fmt("%.1e", std::abs(ex1.lhs.imag() - want)) + ")";
  return {ok, detail};
}

Line criterion9() {
  const char* argv[] = {"lerch-verify", "table", "--format", "json"};
  std::ostringstream a, b, err;
  run_cli(4, argv, a, err);
  run_cli(4, argv, b, err);
  return {a.str() == b.str() && !a.str().empty(), std::to_string(a.str().size()) + " bytes"};
}

}  // namespace

int main() {
  std::vector<std::pair<const char*, std::function<Line()>>> criteria = {
      {"grad-3.244.4 sweep, 20 samples, seed 42, rel <= 1e-8, < 10 s", criterion1},
      {"log-csc2 sweep, 20 samples, rel <= 1e-8", criterion2},
      {"grad-4.235.1/2/3 at n in {3,4,5}, m in {1,2}, rel <= 1e-8", criterion3},
      {"log-denominator real-constant examples, rel <= 1e-8", criterion4},
      {"reduction chain, closed forms only, rel <= 1e-10", criterion5},
      {"specfun property suites, >= 200 samples each", criterion6},
      {"Glaisher constant 1.2824271291 +- 1e-9", criterion7},
      {"branch-sensitive entries converge with a definitive verdict", criterion8},
      {"table --format json byte-identical across runs", criterion9},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Line l;
    try {
      l = criteria[i].second();
    } catch (const std::exception& e) {
      l = {false, std::string("exception: ") + e.what()};
    }
    if (!l.ok) ++failed;
    std::printf("%s  %zu  %s  [%s]\n", l.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, l.detail.c_str());
  }
  std::printf("%d/%zu criteria pass\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
