// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lerch/catalog.hpp"

namespace lerch {

enum class Verdict { pass, fail, unsupported, discrepancy_documented };

std::string_view to_string(Verdict v);

enum class Precision { fast, standard, high };

/// "fast", "default", "high"; nullopt otherwise.
std::optional<Precision> parse_precision(std::string_view name);
std::string_view to_string(Precision p);

QuadratureOptions quadrature_options(Precision p);

struct LhsDiag {
  bool converged = false;
  double est_error = 0.0;
  int nodes = 0;
  int level = 0;
  int nonfinite = 0;
};

struct VerificationReport {
  std::string entry_id;
  ToleranceClass tolerance_class = ToleranceClass::classical;
  ParamSet params;
  std::vector<std::string> param_names;  // the entry's parameters, for rendering
  Complex lhs;
  Complex rhs;  // NaN when the closed form is unsupported
  double abs_residual = 0.0;
  double rel_residual = 0.0;  // NaN when rhs = 0
  double tolerance = 0.0;
  LhsDiag lhs_diag;
  std::vector<std::string> rhs_diag;  // strategy tags
  double rhs_est_error = 0.0;
  Verdict verdict = Verdict::fail;
  std::string message;  // diagnostic for unsupported / fail
  double wall_time = 0.0;  // seconds; rendered only on request
};

/// Below this |rhs| the verdict uses the absolute residual.
inline constexpr double kNearZeroRhs = 1e-6;

/// tol <= 0 selects the entry's class default. Throws UnknownEntry, or
/// DomainError when validate_params fails; any specfun failure after
/// validation becomes verdict = unsupported.
VerificationReport verify_entry(std::string_view id, const ParamSet& params, double tol = 0.0,
                                Precision precision = Precision::standard);

/// Applies the verdict policy to a report whose lhs, rhs and diagnostics are
/// filled in. Exposed for tests.
Verdict decide_verdict(const VerificationReport& r);

struct SweepSpec {
  std::string entry_id;
  int count = 0;
  std::uint64_t seed = 0;
  /// Overrides for the entry's own box, matched by parameter name.
  std::vector<BoxEntry> box;
  double margin = -1.0;  // < 0: entry default
  double tol = 0.0;
  Precision precision = Precision::standard;
  int threads = 0;  // 0: hardware concurrency
  int max_attempts = 10000;  // per sample, before giving up
};

struct SweepSummary {
  int count = 0;
  int pass = 0;
  int fail = 0;
  int unsupported = 0;
  int discrepancy = 0;
  double pass_rate = 0.0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  long attempts = 0;
  double rejection_rate = 0.0;
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  SweepSummary summary;
};

/// Draws sample i from SplitMix64(seed).split(i), rejecting until the
/// parameters validate with the sweep margin. Throws DomainError for an entry
/// without free parameters or when a sample cannot be drawn.
std::vector<ParamSet> sweep_samples(const SweepSpec& spec, long* attempts = nullptr);

/// Reports are in sample order whatever the thread count.
SweepResult sweep(const SweepSpec& spec);

SweepSummary summarize(const std::vector<VerificationReport>& reports, long attempts = 0);

/// One report per table row at the row's first default, in row order.
std::vector<VerificationReport> run_table(double tol = 0.0, Precision precision = Precision::standard, int threads = 0);

}  // namespace lerch
