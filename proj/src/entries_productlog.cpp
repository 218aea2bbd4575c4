// SPDX-License-Identifier: Apache-2.0
// Products of logarithms: Lerch sums at s = -k-1, Hurwitz and zeta' forms.
#include <cmath>

#include "catalog_detail.hpp"

namespace lerch::detail {

namespace {

Check check_nkl(const char* name, Complex u, const ParamSet& p, double margin) {
  if (auto c = check_l(p.l)) return c;
  if (auto c = check_pole(name, u, p.l)) return c;
  return check_strip(name, u, p.l, margin);
}

// e^{2 i pi u / l} (2 pi Phi(z_u, -k-1, v) + i l log(a) Phi(z_u, -k, v)) times coeff
Complex product_term(Complex u, const ParamSet& p, Complex coeff, EvalTrace& tr) {
  Complex z = lerch_z(u, p.l);
  Complex v = lerch_v(p.l, p.a);
  Complex c = coeff * std::exp(2.0 * kI * kPi * u / p.l);
  return tr.use(lerch_phi({z, -p.k - 1.0, v}), c * 2.0 * kPi) +
         tr.use(lerch_phi({z, -p.k, v}), c * kI * p.l * principal_log(p.a));
}

// -2^(k-1) pi^(k+1) e^(i pi/l) (i/l)^k / l^2
Complex product_prefactor(const ParamSet& p) {
  return -cpow_principal(2.0, p.k - 1.0) * cpow_principal(kPi, p.k + 1.0) * std::exp(kI * kPi / p.l) *
         cpow_principal(kI / p.l, p.k) / (p.l * p.l);
}

// x log(x) log(log(x^2)) log^k(x^2) / (x^4 - 1)
Complex log_log_integrand(Complex k, double L) {
  Complex two_l{2.0 * L, 0.0};
  return power_ratio(1.0, 4.0, L) * L * principal_log(two_l) * cpow_principal(two_l, k);
}

Complex log_log_zeta(const ParamSet& p, EvalTrace& tr) {
  const Complex k = p.k;
  Complex pre = cpow_principal(2.0, -k - 4.0) * std::exp(kI * kPi * k / 2.0);
  Complex dz = (cpow_principal(4.0 * kPi, k + 2.0) - cpow_principal(2.0 * kPi, k + 2.0)) * pre;
  Complex bracket = kI * kPi * (cpow_principal(2.0, k + 2.0) - 1.0) + cpow_principal(2.0, k + 3.0) * std::log(2.0 * kPi) -
                    2.0 * std::log(kPi);
  Complex zc = pre * bracket * std::cos(kPi * k / 2.0) * gamma(k + 2.0);
  return tr.use(hurwitz_zeta_sderiv(-k - 1.0, 1.0), dz) + tr.use(riemann_zeta(k + 2.0), zc);
}

const std::vector<BoxEntry> kKaBox = {{"k", int_range(0, 3)}, {"a", real_range(0.5, 2.0)}};

ParamSet k_only(double k) {
  ParamSet p;
  p.k = k;
  return p;
}

}  // namespace

void add_productlog_entries(std::vector<CatalogEntry>& out) {
  {
    CatalogEntry e;
    e.id = "product-log-sum";
    e.anchor = "log(x) log^k(a x^2) product, sum of two Lerch pairs";
    e.stated_hypothesis = "m, n, a, k, l complex";
    e.params = {"n", "m", "l", "k", "a"};
    e.free_params = e.params;
    e.integrand_text = "log(x) (x^(2m) + x^(2n)) log^k(a x^2) / (x^(2l) - 1)";
    e.closed_form_text =
        "-2^(k-1) pi^(k+1) e^(i pi/l) (i/l)^k / l^2 sum_{u=m,n} e^(2 i pi u/l) (2 pi Phi(z_u, -k-1, v) + i l log(a) "
        "Phi(z_u, -k, v))";
    ParamSet d1;
    d1.n = 0.3;
    d1.m = 1.1;
    d1.l = 2.5;
    d1.k = 1.0;
    ParamSet d2 = d1;
    d2.k = 2.0;
    d2.a = 1.5;
    ParamSet d3;
    d3.n = 0.2;
    d3.m = 0.7;
    d3.l = 2.0;
    d3.a = 0.8;
    e.defaults = {d1, d2, d3};
    e.sweep_box = {{"n", real_range(0.0, 2.0)}, {"m", real_range(0.0, 2.0)}, {"l", real_range(1.5, 3.5)},
                   {"k", int_range(0, 3)},      {"a", real_range(0.5, 2.0)}};
    e.sweep_margin = 0.1;
    e.check = [](const ParamSet& p, double margin) -> Check {
      if (auto c = check_a(p.a)) return c;
      if (auto c = check_nkl("n", p.n, p, margin)) return c;
      if (auto c = check_nkl("m", p.m, p, margin)) return c;
      return check_k(p.k, margin);
    };
    e.integrand = [](const ParamSet& p, double x) {
      double L = std::log(x);
      Complex q = 2.0 * p.l;
      return L * (power_ratio(2.0 * p.m, q, L) + power_ratio(2.0 * p.n, q, L)) * log_ax2_pow(p.a, p.k, L);
    };
    e.extra_splits = [](const ParamSet& p) { return log_zero_split(p.a); };
    e.closed_form = [](const ParamSet& p, EvalTrace& tr) {
      Complex c = product_prefactor(p);
      return product_term(p.m, p, c, tr) + product_term(p.n, p, c, tr);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "product-log-single";
    e.anchor = "log(x) log^k(a x^2) product, single power";
    e.stated_hypothesis = "n, a, k, l complex";
    e.params = {"n", "l", "k", "a"};
    e.free_params = e.params;
    e.integrand_text = "x^(2n) log(x) log^k(a x^2) / (x^(2l) - 1)";
    e.closed_form_text =
        "-2^(k-1) pi^(k+1) (i/l)^k z_n (2 pi Phi(z_n, -k-1, v) + i l log(a) Phi(z_n, -k, v)) / l^2";
    ParamSet d1;
    d1.n = 0.3;
    d1.l = 2.5;
    d1.k = 1.0;
    ParamSet d2;
    d2.n = 0.7;
    d2.l = 2.0;
    d2.k = 2.0;
    d2.a = 1.5;
    e.defaults = {d1, d2};
    e.sweep_box = {{"n", real_range(0.0, 2.0)}, {"l", real_range(1.5, 3.5)}, {"k", int_range(0, 3)},
                   {"a", real_range(0.5, 2.0)}};
    e.sweep_margin = 0.1;
    e.check = [](const ParamSet& p, double margin) -> Check {
      if (auto c = check_a(p.a)) return c;
      if (auto c = check_nkl("n", p.n, p, margin)) return c;
      return check_k(p.k, margin);
    };
    e.integrand = [](const ParamSet& p, double x) {
      double L = std::log(x);
      return L * power_ratio(2.0 * p.n, 2.0 * p.l, L) * log_ax2_pow(p.a, p.k, L);
    };
    e.extra_splits = [](const ParamSet& p) { return log_zero_split(p.a); };
    e.closed_form = [](const ParamSet& p, EvalTrace& tr) { return product_term(p.n, p, product_prefactor(p), tr); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "product-log-hurwitz";
    e.anchor = "x log(x) log^k(a x^2) / (x^4 - 1), Hurwitz zeta form";
    e.stated_hypothesis = "a, k complex";
    e.params = {"k", "a"};
    e.free_params = e.params;
    e.integrand_text = "x log(x) log^k(a x^2) / (x^4 - 1)";
    e.closed_form_text =
        "i^k 2^(k-2) pi^(k+1) (2 pi zeta(-k-1, w1) - 2 pi zeta(-k-1, w2) + i log(a) (zeta(-k, w1) - zeta(-k, w2))), "
        "w1 = (pi - i log a)/(2 pi), w2 = 1 - i log(a)/(2 pi)";
    ParamSet d2 = k_only(2.0);
    d2.a = 1.5;
    ParamSet d3 = k_only(3.0);
    d3.a = 0.7;
    e.defaults = {k_only(0.0), k_only(1.0), d2, d3};
    e.sweep_box = kKaBox;
    e.sweep_margin = 0.1;
    e.check = [](const ParamSet& p, double margin) -> Check {
      if (auto c = check_a(p.a)) return c;
      return check_k(p.k, margin);
    };
    e.integrand = [](const ParamSet& p, double x) {
      double L = std::log(x);
      return power_ratio(1.0, 4.0, L) * L * log_ax2_pow(p.a, p.k, L);
    };
    e.extra_splits = [](const ParamSet& p) { return log_zero_split(p.a); };
    e.closed_form = [](const ParamSet& p, EvalTrace& tr) {
      Complex la = principal_log(p.a);
      Complex w1 = (kPi - kI * la) / (2.0 * kPi);
      Complex w2 = 1.0 - kI * la / (2.0 * kPi);
      Complex pre = cpow_principal(kI, p.k) * cpow_principal(2.0, p.k - 2.0) * cpow_principal(kPi, p.k + 1.0);
      Complex s1 = -p.k - 1.0, s0 = -p.k;
      return tr.use(hurwitz_zeta(s1, w1), pre * 2.0 * kPi) - tr.use(hurwitz_zeta(s1, w2), pre * 2.0 * kPi) +
             tr.use(hurwitz_zeta(s0, w1), pre * kI * la) - tr.use(hurwitz_zeta(s0, w2), pre * kI * la);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "log-log-zeta";
    e.anchor = "x log(x) log(log(x^2)) log^k(x^2) / (x^4 - 1), zeta' form";
    e.stated_hypothesis = "k complex";
    e.params = {"k"};
    e.free_params = e.params;
    e.tolerance_class = ToleranceClass::order_derivative;
    e.integrand_text = "x log(x) log(log(x^2)) log^k(x^2) / (x^4 - 1)";
    e.closed_form_text =
        "2^(-k-4) e^(i pi k/2) (((4 pi)^(k+2) - (2 pi)^(k+2)) zeta'(-k-1) + zeta(k+2) (i pi (2^(k+2) - 1) + 2^(k+3) "
        "log(2 pi) - 2 log(pi)) cos(pi k/2) Gamma(k+2))";
    e.defaults = {k_only(0.0), k_only(1.0), k_only(2.0)};
    e.sweep_box = {{"k", int_range(0, 4)}};
    e.sweep_margin = 0.1;
    e.check = [](const ParamSet& p, double margin) { return check_k(p.k, margin); };
    e.integrand = [](const ParamSet& p, double x) { return log_log_integrand(p.k, std::log(x)); };
    e.closed_form = log_log_zeta;
    out.push_back(std::move(e));
  }

  struct Example {
    const char* id;
    const char* anchor;
    const char* integrand_text;
    const char* closed_form_text;
    Complex (*integrand)(double L);
    Complex (*value)(EvalTrace&);
  };
  const Example examples[] = {
      {"log-log-zeta-ex1", "x log(x) log(x^2) log(log(x^2)) / (x^4 - 1)",
       "x log(x) log(x^2) log(log(x^2)) / (x^4 - 1)", "-7 i pi zeta(3) / 16",
       [](double L) { return log_log_integrand(1.0, L); },
       [](EvalTrace& tr) { return tr.use(riemann_zeta(3.0), -7.0 * kI * kPi / 16.0); }},
      {"log-log-zeta-ex2", "x log(x) log(log(x^2)) / ((x^4 - 1) log(x^2))",
       "x log(x) log(log(x^2)) / ((x^4 - 1) log(x^2))", "pi (pi - 2 i log 2) / 16",
       [](double L) { return power_ratio(1.0, 4.0, L) * principal_log(Complex{2.0 * L, 0.0}) / 2.0; },
       [](EvalTrace&) { return kPi * (kPi - 2.0 * kI * std::log(2.0)) / 16.0; }},
      {"log-log-zeta-ex3", "x log(x) log(log(x^2)) / (x^4 - 1), Glaisher constant",
       "x log(x) log(log(x^2)) / (x^4 - 1)", "pi^2 (8 log(2^(1/3) pi^(1/4) / A^3) + 2 + i pi) / 32",
       [](double L) { return log_log_integrand(0.0, L); },
       [](EvalTrace&) {
         double A = glaisher();
         double lg = std::log(std::cbrt(2.0) * std::pow(kPi, 0.25) / (A * A * A));
         return kPi * kPi * (8.0 * lg + 2.0 + kI * kPi) / 32.0;
       }},
  };
  for (const Example& ex : examples) {
    CatalogEntry e;
    e.id = ex.id;
    e.anchor = ex.anchor;
    e.stated_hypothesis = "fixed instance";
    e.tolerance_class = ToleranceClass::branch_offset;
    e.integrand_text = ex.integrand_text;
    e.closed_form_text = ex.closed_form_text;
    e.defaults = {ParamSet{}};
    e.check = [](const ParamSet&, double) -> Check { return std::nullopt; };
    e.integrand = [f = ex.integrand](const ParamSet&, double x) { return f(std::log(x)); };
    e.closed_form = [f = ex.value](const ParamSet&, EvalTrace& tr) { return f(tr); };
    out.push_back(std::move(e));
  }
}

}  // namespace lerch::detail
