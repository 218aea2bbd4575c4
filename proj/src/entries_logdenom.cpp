// SPDX-License-Identifier: Apache-2.0
// alpha^2 + log^2(x) denominators: Phi at s = 1 and six real-valued instances.
#include <cmath>

#include "catalog_detail.hpp"

namespace lerch::detail {

namespace {

const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);

struct Example {
  const char* id;
  const char* anchor;
  const char* integrand_text;
  const char* closed_form_text;
  double n, m, l, alpha;
  // Integrand = diff_ratio(2n, 2m, 2l) * weight(L).
  Complex (*weight)(double L);
  double (*value)();
};

const Example kExamples[] = {
    {"log-denominator-ex1-log", "alpha^2 + log^2 x denominator, first instance with log numerator",
     "(x - x^(2/3)) log(x) / ((x^3 - 1) (log^2(x) + pi^2))",
     "(4 + sqrt3 pi - 8 cos(pi/9) + log(2 (1 + sin(pi/18)) / (9 (2 - 2 sin(pi/18))))) / 4", 0.5, 1.0 / 3.0, 1.5, kPi,
     [](double L) -> Complex { return L / (L * L + kPi * kPi); },
     [] {
       double s = std::sin(kPi / 18.0);
       return (4.0 + kS3 * kPi - 8.0 * std::cos(kPi / 9.0) + std::log(2.0 * (1.0 + s) / (9.0 * (2.0 - 2.0 * s)))) / 4.0;
     }},
    {"log-denominator-ex1-plain", "alpha^2 + log^2 x denominator, first instance without log",
     "(x^(2/3) - x) / ((x^3 - 1) (log^2(x) + pi^2))", "(pi + 8 sin(pi/9) + 2 sqrt3 (atanh(sin(pi/18)) - 2)) / (4 pi)", 0.5,
     1.0 / 3.0, 1.5, kPi, [](double L) -> Complex { return -1.0 / (L * L + kPi * kPi); },
     [] {
       return (kPi + 8.0 * std::sin(kPi / 9.0) + 2.0 * kS3 * (std::atanh(std::sin(kPi / 18.0)) - 2.0)) / (4.0 * kPi);
     }},
    {"log-denominator-ex2-log", "alpha^2 + log^2 x denominator, second instance with log numerator",
     "(x - x^(2/3)) log(x) / ((x^4 - 1) (4 log^2(x) + pi^2))", "(-pi + 24 log 2 - 6 sqrt3 log(2 + sqrt3)) / 96", 0.5,
     1.0 / 3.0, 2.0, kPi / 2.0, [](double L) -> Complex { return L / (4.0 * L * L + kPi * kPi); },
     [] { return (-kPi + 24.0 * std::log(2.0) - 6.0 * kS3 * std::log(2.0 + kS3)) / 96.0; }},
    {"log-denominator-ex2-plain", "alpha^2 + log^2 x denominator, second instance without log",
     "(x^(2/3) - x) / ((x^4 - 1) (4 log^2(x) + pi^2))", "(sqrt3 pi - 6 acosh 2) / (48 pi)", 0.5, 1.0 / 3.0, 2.0,
     kPi / 2.0, [](double L) -> Complex { return -1.0 / (4.0 * L * L + kPi * kPi); },
     [] { return (kS3 * kPi - 6.0 * std::acosh(2.0)) / (48.0 * kPi); }},
    {"log-denominator-ex3-plain", "alpha^2 + log^2 x denominator, third instance without log",
     "(sqrt(x) - 1) x / ((x^4 - 1) (4 log^2(x) + pi^2))", "-(pi - 4 log(2 + sqrt2)) / (16 sqrt2 pi)", 0.5, 0.75, 2.0,
     kPi / 2.0, [](double L) -> Complex { return -1.0 / (4.0 * L * L + kPi * kPi); },
     [] { return -(kPi - 4.0 * std::log(2.0 + kS2)) / (16.0 * kS2 * kPi); }},
    {"log-denominator-ex3-log", "alpha^2 + log^2 x denominator, third instance with log numerator",
     "(x - x^(3/2)) log(x) / ((x^4 - 1) (log^2(x) + pi^2/4))",
     "log 2 - log(2 + sqrt2) / (2 sqrt2) - atan(1/(1 + sqrt2)) / sqrt2", 0.5, 0.75, 2.0, kPi / 2.0,
     [](double L) -> Complex { return L / (L * L + kPi * kPi / 4.0); },
     [] { return std::log(2.0) - std::log(2.0 + kS2) / (2.0 * kS2) - std::atan(1.0 / (1.0 + kS2)) / kS2; }},
};

Complex phi_term(Complex u, const ParamSet& p, EvalTrace& tr) {
  Complex z = lerch_z(u, p.l);
  Complex coeff = std::exp(kI * kPi / p.l) * std::exp(2.0 * kI * kPi * u / p.l);
  return tr.use(lerch_phi({z, 1.0, p.alpha * p.l / kPi + 1.0}), coeff);
}

}  // namespace

void add_logdenom_entries(std::vector<CatalogEntry>& out) {
  {
    CatalogEntry e;
    e.id = "log-denominator-lerch";
    e.anchor = "alpha^2 + log^2 x denominator, Phi at s = 1";
    e.stated_hypothesis = "m, n, l complex";
    e.params = {"n", "m", "l", "alpha"};
    e.free_params = e.params;
    e.difference_form = true;
    e.integrand_text = "(log(x) (x^(2n) - x^(2m)) + i alpha (x^(2m) - x^(2n))) / ((x^(2l) - 1) (alpha^2 + log^2(x)))";
    e.closed_form_text = "e^(i pi/l) (e^(2 i pi n/l) Phi(z_n, 1, alpha l/pi + 1) - e^(2 i pi m/l) Phi(z_m, 1, alpha l/pi + 1))";
    for (const auto& ex : {kExamples[0], kExamples[2], kExamples[4]}) {
      ParamSet p;
      p.n = ex.n;
      p.m = ex.m;
      p.l = ex.l;
      p.alpha = ex.alpha;
      e.defaults.push_back(p);
    }
    ParamSet d;
    d.n = 0.3;
    d.m = 1.1;
    d.l = 2.5;
    d.alpha = 0.7;
    e.defaults.push_back(d);
    e.sweep_box = {{"n", real_range(0.0, 2.0)},
                   {"m", real_range(0.0, 2.0)},
                   {"l", real_range(1.5, 3.0)},
                   {"alpha", real_range(0.2, 4.0)}};
    e.sweep_margin = 0.1;
    e.check = [](const ParamSet& p, double margin) -> Check {
      if (auto c = check_l(p.l)) return c;
      if (auto c = check_pole("n", p.n, p.l)) return c;
      if (auto c = check_pole("m", p.m, p.l)) return c;
      if (auto c = check_strip("n", p.n, p.l, margin)) return c;
      if (auto c = check_strip("m", p.m, p.l, margin)) return c;
      // The identity fails for Re(alpha) < 0; Re(alpha) = 0 puts a pole on the path.
      if (!(p.alpha.real() > margin)) return "Re(alpha) <= 0";
      return std::nullopt;
    };
    e.integrand = [](const ParamSet& p, double x) {
      double L = std::log(x);
      Complex d = diff_ratio(2.0 * p.n, 2.0 * p.m, 2.0 * p.l, L);
      return d * (L - kI * p.alpha) / (p.alpha * p.alpha + L * L);
    };
    e.closed_form = [](const ParamSet& p, EvalTrace& tr) { return phi_term(p.n, p, tr) - phi_term(p.m, p, tr); };
    out.push_back(std::move(e));
  }
  for (const Example& ex : kExamples) {
    CatalogEntry e;
    e.id = ex.id;
    e.anchor = ex.anchor;
    e.stated_hypothesis = "fixed instance";
    e.params = {"n", "m", "l", "alpha"};
    e.integrand_text = ex.integrand_text;
    e.closed_form_text = ex.closed_form_text;
    ParamSet p;
    p.n = ex.n;
    p.m = ex.m;
    p.l = ex.l;
    p.alpha = ex.alpha;
    e.defaults = {p};
    e.check = [names = e.params, p](const ParamSet& given, double) { return check_fixed(names, p, given); };
    e.integrand = [ex](const ParamSet&, double x) {
      double L = std::log(x);
      return diff_ratio(2.0 * ex.n, 2.0 * ex.m, 2.0 * ex.l, L) * ex.weight(L);
    };
    e.closed_form = [ex](const ParamSet&, EvalTrace&) { return Complex{ex.value(), 0.0}; };
    out.push_back(std::move(e));
  }
}

}  // namespace lerch::detail
