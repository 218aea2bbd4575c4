// SPDX-License-Identifier: Apache-2.0
#include "lerch/catalog.hpp"

#include <cmath>

#include "catalog_detail.hpp"
#include "lerch/errors.hpp"

namespace lerch {

namespace detail {

Complex power_ratio(Complex p, Complex q, double L) {
  Complex qL = q * L;
  if (qL.real() > 0.0) return std::exp((p - q) * L) / -cexpm1(-qL);
  return std::exp(p * L) / cexpm1(qL);
}

Complex diff_ratio(Complex p1, Complex p2, Complex q, double L) {
  Complex qL = q * L;
  if (std::abs(L) < 1.0) {
    Complex num = cexpm1((p1 - p2) * L);
    if (qL.real() > 0.0) return std::exp((p2 - q) * L) * num / -cexpm1(-qL);
    return std::exp(p2 * L) * num / cexpm1(qL);
  }
  if (qL.real() > 0.0) return (std::exp((p1 - q) * L) - std::exp((p2 - q) * L)) / -cexpm1(-qL);
  return (std::exp(p1 * L) - std::exp(p2 * L)) / cexpm1(qL);
}

Complex log_ax2_pow(Complex a, Complex k, double L) {
  Complex base = (a == Complex{1.0, 0.0}) ? Complex{2.0 * L, 0.0} : principal_log(a) + 2.0 * L;
  return cpow_principal(base, k);
}

Complex lerch_z(Complex u, Complex l) { return std::exp(kI * kPi * (2.0 * u + 1.0) / l); }

Complex lerch_v(Complex l, Complex a) { return 1.0 - kI * l * principal_log(a) / (2.0 * kPi); }

Check check_l(Complex l) {
  if (l == Complex{0.0, 0.0}) return "l = 0";
  return std::nullopt;
}

Check check_a(Complex a) {
  if (a.imag() == 0.0 && a.real() <= 0.0) return "a on (-inf, 0]";
  return std::nullopt;
}

Check check_pole(const char* name, Complex u, Complex l) {
  if (std::abs(lerch_z(u, l) - 1.0) < 1e-12) return std::string("Lerch argument on pole (") + name + ")";
  return std::nullopt;
}

Check check_strip(const char* name, Complex u, Complex l, double margin) {
  std::string re = std::string("Re(") + name + ")";
  if (!(u.real() > -0.5 + margin)) return re + " <= -1/2";
  if (!(u.real() < l.real() - 0.5 - margin)) return re + " >= Re(l) - 1/2";
  return std::nullopt;
}

Check check_k(Complex k, double margin) {
  if (!(k.real() > -1.0 + margin)) return "Re(k) <= -1";
  return std::nullopt;
}

std::vector<double> log_zero_split(Complex a) {
  if (a.imag() == 0.0 && a.real() > 0.0 && a.real() != 1.0) return {1.0 / std::sqrt(a.real())};
  return {};
}

Check check_fixed(const std::vector<std::string>& names, const ParamSet& fixed, const ParamSet& given) {
  for (const auto& n : names)
    if (fixed.get(n) != given.get(n)) return "fixed instance: " + n + " is not a free parameter";
  return std::nullopt;
}

ParamRange real_range(double lo, double hi) { return {lo, hi, 0.0, 0.0, false}; }

ParamRange int_range(int lo, int hi) { return {double(lo), double(hi), 0.0, 0.0, true}; }

}  // namespace detail

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    detail::add_master_entries(out);
    detail::add_logdenom_entries(out);
    detail::add_productlog_entries(out);
    detail::add_table_entries(out);
    return out;
  }();
  return entries;
}

const CatalogEntry& find_entry(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
    for (const auto& alias : e.aliases)
      if (alias == id) return e;
  }
  throw UnknownEntry(std::string(id));
}

std::vector<EntrySummary> list_entries() {
  std::vector<EntrySummary> out;
  for (const auto& e : catalog()) out.push_back({e.id, e.anchor, e.tolerance_class});
  return out;
}

Validation validate_params(std::string_view id, const ParamSet& params, double margin) {
  const CatalogEntry& e = find_entry(id);
  for (const auto& name : e.params)
    if (!is_finite(params.get(name))) return {false, "non-finite " + name};
  if (auto why = e.check(params, margin)) return {false, *why};
  return {};
}

Complex closed_form(std::string_view id, const ParamSet& params, EvalTrace* trace) {
  const CatalogEntry& e = find_entry(id);
  Validation v = validate_params(id, params);
  if (!v) throw DomainError(e.id + ": " + v.reason);
  if (e.difference_form && params.n == params.m) return {0.0, 0.0};
  EvalTrace local;
  return e.closed_form(params, trace ? *trace : local);
}

Complex integrand_at(std::string_view id, const ParamSet& params, double x) {
  const CatalogEntry& e = find_entry(id);
  if (!(x > 0.0) || x == 1.0 || !std::isfinite(x)) throw DomainError("integrand evaluated at x = " + std::to_string(x));
  Validation v = validate_params(id, params);
  if (!v) throw DomainError(e.id + ": " + v.reason);
  return e.integrand(params, x);
}

Integrand make_integrand(std::string_view id, const ParamSet& params) {
  const CatalogEntry& e = find_entry(id);
  Validation v = validate_params(id, params);
  if (!v) throw DomainError(e.id + ": " + v.reason);
  Integrand f;
  f.eval = [fn = e.integrand, params](double x) { return fn(params, x); };
  f.splits = {1.0};
  if (e.extra_splits) {
    for (double s : e.extra_splits(params))
      if (s > 0.0 && std::isfinite(s)) f.splits.push_back(s);
  }
  return f;
}

std::vector<std::string> table_row_ids() {
  std::vector<std::string> ids(15);
  for (const auto& e : catalog())
    if (e.table_row >= 1 && e.table_row <= 15) ids[e.table_row - 1] = e.id;
  return ids;
}

}  // namespace lerch
