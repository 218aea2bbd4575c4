// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lerch/complex.hpp"
#include "lerch/quadrature.hpp"
#include "lerch/specfun.hpp"

namespace lerch {

/// Integral parameters. `alpha` is the shift in alpha^2 + log^2 x, kept apart
/// from the scale `a` inside log(a x^2).
struct ParamSet {
  Complex n{0.0, 0.0};
  Complex m{0.0, 0.0};
  Complex l{0.0, 0.0};
  Complex k{0.0, 0.0};
  Complex a{1.0, 0.0};
  Complex p{0.0, 0.0};
  Complex q{0.0, 0.0};
  Complex alpha{0.0, 0.0};

  static const std::vector<std::string>& names();
  /// Throws DomainError for an unknown name.
  Complex get(std::string_view name) const;
  void set(std::string_view name, Complex value);
  /// "name=value" with a complex literal value.
  void assign(std::string_view spec);

  bool operator==(const ParamSet&) const = default;
};

enum class ToleranceClass { classical, branch_offset, order_derivative };

std::string_view to_string(ToleranceClass c);

/// Default verdict tolerance for a class.
double default_tolerance(ToleranceClass c);

struct Validation {
  bool ok = true;
  std::string reason;  // names the violated condition when !ok
  explicit operator bool() const { return ok; }
};

/// Strategy tags and accumulated specfun error bound of a closed-form evaluation.
struct EvalTrace {
  std::vector<Strategy> strategies;
  double est_error = 0.0;

  /// Returns coeff * r.value and records r.
  Complex use(const EvalResult& r, Complex coeff = 1.0);
  std::vector<std::string> tags() const;
};

/// Sampling range for one parameter.
struct ParamRange {
  double re_lo = 0.0, re_hi = 0.0;
  double im_lo = 0.0, im_hi = 0.0;
  bool integer = false;
};

struct BoxEntry {
  std::string name;
  ParamRange range;
};

struct CatalogEntry {
  std::string id;
  std::string anchor;
  std::string stated_hypothesis;  // as printed; the predicate may differ
  std::vector<std::string> aliases;
  std::vector<std::string> params;       // parameters the entry reads
  std::vector<std::string> free_params;  // sweepable; empty for fixed entries
  ToleranceClass tolerance_class = ToleranceClass::classical;
  bool difference_form = false;  // antisymmetric under n <-> m
  int table_row = 0;             // 1..15, 0 if not a table row
  std::string integrand_text;
  std::string closed_form_text;
  std::vector<ParamSet> defaults;
  std::vector<BoxEntry> sweep_box;
  double sweep_margin = 0.0;
  /// Fills parameters pinned by a constraint after sampling the free ones.
  std::function<void(ParamSet&)> derive;

  /// Empty when params are admissible, else the violated condition. `margin`
  /// shrinks open strips for sampling.
  std::function<std::optional<std::string>(const ParamSet&, double margin)> check;
  std::function<Complex(const ParamSet&, double)> integrand;
  /// Interior split points beyond x = 1.
  std::function<std::vector<double>(const ParamSet&)> extra_splits;
  std::function<Complex(const ParamSet&, EvalTrace&)> closed_form;
};

/// All entries in registry order.
const std::vector<CatalogEntry>& catalog();

/// Lookup by id or alias; throws UnknownEntry.
const CatalogEntry& find_entry(std::string_view id);

struct EntrySummary {
  std::string id;
  std::string anchor;
  ToleranceClass tolerance_class;
};

std::vector<EntrySummary> list_entries();

Validation validate_params(std::string_view id, const ParamSet& params, double margin = 0.0);

/// Right-hand side. Throws DomainError when validation fails; m == n on a
/// difference-form entry returns exactly 0.
Complex closed_form(std::string_view id, const ParamSet& params, EvalTrace* trace = nullptr);

/// Throws DomainError at x = 1, x <= 0 or when validation fails.
Complex integrand_at(std::string_view id, const ParamSet& params, double x);

Integrand make_integrand(std::string_view id, const ParamSet& params);

/// Ids of the 15 table rows in row order.
std::vector<std::string> table_row_ids();

}  // namespace lerch
