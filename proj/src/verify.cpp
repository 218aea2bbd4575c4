// SPDX-License-Identifier: Apache-2.0
#include "lerch/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "lerch/errors.hpp"
#include "lerch/random.hpp"

namespace lerch {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs f(0..n-1) on a small pool; rethrows the first exception.
template <class F>
void parallel_for(int n, int threads, F f) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

const ParamRange* find_range(const std::vector<BoxEntry>& box, const std::string& name) {
  for (const auto& b : box)
    if (b.name == name) return &b.range;
  return nullptr;
}

Complex draw(const ParamRange& r, SplitMix64& rng) {
  if (r.integer) {
    auto lo = static_cast<long>(std::ceil(r.re_lo)), hi = static_cast<long>(std::floor(r.re_hi));
    if (hi < lo) throw DomainError("empty integer range");
    long span = hi - lo + 1;
    return {static_cast<double>(lo + static_cast<long>(rng.next() % static_cast<std::uint64_t>(span))), 0.0};
  }
  double re = r.re_hi > r.re_lo ? rng.uniform(r.re_lo, r.re_hi) : r.re_lo;
  double im = r.im_hi > r.im_lo ? rng.uniform(r.im_lo, r.im_hi) : r.im_lo;
  return {re, im};
}

double verdict_scale(Complex rhs) { return std::abs(rhs) >= kNearZeroRhs ? std::abs(rhs) : 1.0; }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unsupported: return "unsupported";
    case Verdict::discrepancy_documented: return "discrepancy-documented";
  }
  return "?";
}

std::optional<Precision> parse_precision(std::string_view name) {
  if (name == "fast") return Precision::fast;
  if (name == "default") return Precision::standard;
  if (name == "high") return Precision::high;
  return std::nullopt;
}

std::string_view to_string(Precision p) {
  switch (p) {
    case Precision::fast: return "fast";
    case Precision::standard: return "default";
    case Precision::high: return "high";
  }
  return "?";
}

QuadratureOptions quadrature_options(Precision p) {
  switch (p) {
    case Precision::fast: return {1e-8, 10, 3};
    case Precision::standard: return {1e-11, 12, 3};
    case Precision::high: return {1e-13, 12, 4};
  }
  return {};
}

Verdict decide_verdict(const VerificationReport& r) {
  if (!is_finite(r.rhs)) return Verdict::unsupported;
  double scale = verdict_scale(r.rhs);
  bool lhs_ok = r.lhs_diag.converged && r.lhs_diag.est_error <= r.tolerance * scale;
  if (lhs_ok && r.abs_residual <= r.tolerance * scale) return Verdict::pass;
  if (lhs_ok && r.tolerance_class != ToleranceClass::classical) return Verdict::discrepancy_documented;
  return Verdict::fail;
}

VerificationReport verify_entry(std::string_view id, const ParamSet& params, double tol, Precision precision) {
  const CatalogEntry& entry = find_entry(id);
  Validation valid = validate_params(id, params);
  if (!valid) throw DomainError(entry.id + ": " + valid.reason);

  auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.entry_id = entry.id;
  r.tolerance_class = entry.tolerance_class;
  r.params = params;
  r.param_names = entry.params;
  r.tolerance = tol > 0.0 ? tol : default_tolerance(entry.tolerance_class);

  try {
    QuadratureResult q = integrate_halfline(make_integrand(id, params), quadrature_options(precision));
    r.lhs = q.value;
    r.lhs_diag = {q.converged, q.est_error, q.nodes, q.level, q.nonfinite};
  } catch (const Error& e) {
    r.lhs = {kNaN, kNaN};
    r.message = std::string("quadrature: ") + e.what();
  }

  try {
    EvalTrace trace;
    r.rhs = closed_form(id, params, &trace);
    r.rhs_diag = trace.tags();
    r.rhs_est_error = trace.est_error;
  } catch (const Error& e) {
    r.rhs = {kNaN, kNaN};
    r.message = e.what();
  }

  if (is_finite(r.lhs) && is_finite(r.rhs)) {
    r.abs_residual = std::abs(r.lhs - r.rhs);
    r.rel_residual = std::abs(r.rhs) > 0.0 ? r.abs_residual / std::abs(r.rhs) : kNaN;
  } else {
    r.abs_residual = kNaN;
    r.rel_residual = kNaN;
  }
  r.verdict = decide_verdict(r);
  if (r.verdict == Verdict::fail && r.message.empty()) {
    if (!r.lhs_diag.converged)
      r.message = "quadrature did not converge";
    else if (!(r.lhs_diag.est_error <= r.tolerance * verdict_scale(r.rhs)))
      r.message = "quadrature error estimate above tolerance";
    else
      r.message = "residual above tolerance";
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<ParamSet> sweep_samples(const SweepSpec& spec, long* attempts) {
  const CatalogEntry& entry = find_entry(spec.entry_id);
  if (entry.free_params.empty()) throw DomainError(entry.id + ": fixed instance, no free parameters to sweep");
  if (spec.count < 0) throw DomainError("negative sample count");
  for (const auto& b : spec.box)
    if (std::find(entry.free_params.begin(), entry.free_params.end(), b.name) == entry.free_params.end())
      throw DomainError(entry.id + ": '" + b.name + "' is not a free parameter");
  double margin = spec.margin >= 0.0 ? spec.margin : entry.sweep_margin;

  std::vector<ParamSet> out(spec.count);
  std::vector<long> tries(spec.count, 0);
  SplitMix64 root(spec.seed);
  for (int i = 0; i < spec.count; ++i) {
    SplitMix64 rng = root.split(static_cast<std::uint64_t>(i));
    for (;;) {
      if (tries[i] >= spec.max_attempts)
        throw DomainError(entry.id + ": no valid sample after " + std::to_string(spec.max_attempts) + " draws");
      ++tries[i];
      ParamSet p = entry.defaults.front();
      for (const auto& name : entry.free_params) {
        const ParamRange* r = find_range(spec.box, name);
        if (!r) r = find_range(entry.sweep_box, name);
        if (r) p.set(name, draw(*r, rng));
      }
      if (entry.derive) entry.derive(p);
      if (validate_params(entry.id, p, margin)) {
        out[i] = p;
        break;
      }
    }
  }
  if (attempts) {
    *attempts = 0;
    for (long t : tries) *attempts += t;
  }
  return out;
}

SweepSummary summarize(const std::vector<VerificationReport>& reports, long attempts) {
  SweepSummary s;
  s.count = static_cast<int>(reports.size());
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::fail: ++s.fail; break;
      case Verdict::unsupported: ++s.unsupported; break;
      case Verdict::discrepancy_documented: ++s.discrepancy; break;
    }
    if (std::isfinite(r.abs_residual)) s.max_abs_residual = std::max(s.max_abs_residual, r.abs_residual);
    if (std::isfinite(r.rel_residual)) s.max_rel_residual = std::max(s.max_rel_residual, r.rel_residual);
  }
  s.pass_rate = s.count ? static_cast<double>(s.pass) / s.count : 0.0;
  s.attempts = attempts;
  s.rejection_rate = attempts > 0 ? static_cast<double>(attempts - s.count) / static_cast<double>(attempts) : 0.0;
  return s;
}

SweepResult sweep(const SweepSpec& spec) {
  long attempts = 0;
  std::vector<ParamSet> samples = sweep_samples(spec, &attempts);
  SweepResult out;
  out.reports.resize(samples.size());
  parallel_for(static_cast<int>(samples.size()), spec.threads, [&](int i) {
    out.reports[i] = verify_entry(spec.entry_id, samples[i], spec.tol, spec.precision);
  });
  out.summary = summarize(out.reports, attempts);
  return out;
}

std::vector<VerificationReport> run_table(double tol, Precision precision, int threads) {
  std::vector<std::string> ids = table_row_ids();
  std::vector<VerificationReport> out(ids.size());
  parallel_for(static_cast<int>(ids.size()), threads, [&](int i) {
    out[i] = verify_entry(ids[i], find_entry(ids[i]).defaults.front(), tol, precision);
  });
  return out;
}

}  // namespace lerch
