// SPDX-License-Identifier: Apache-2.0
// The general Lerch closed form and the entries specialised from it.
#include <cmath>

#include "catalog_detail.hpp"

namespace lerch::detail {

namespace {

ParamSet nml(double n, double m, double l) {
  ParamSet p;
  p.n = n;
  p.m = m;
  p.l = l;
  return p;
}

Check strip_nml(const ParamSet& p, double margin) {
  if (auto c = check_l(p.l)) return c;
  if (auto c = check_pole("n", p.n, p.l)) return c;
  if (auto c = check_pole("m", p.m, p.l)) return c;
  if (auto c = check_strip("n", p.n, p.l, margin)) return c;
  return check_strip("m", p.m, p.l, margin);
}

// (2 pi u + pi) / (2 l)
Complex half_angle(Complex u, Complex l) { return (2.0 * kPi * u + kPi) / (2.0 * l); }

Complex csc(Complex x) { return 1.0 / std::sin(x); }
Complex cot(Complex x) { return std::cos(x) / std::sin(x); }

Complex master_term(Complex u, const ParamSet& p, EvalTrace& tr) {
  Complex z = lerch_z(u, p.l);
  Complex coeff = kI * cpow_principal(2.0, p.k) * cpow_principal(kPi, p.k + 1.0) * cpow_principal(kI / p.l, p.k) * z / p.l;
  return tr.use(lerch_phi({z, -p.k, lerch_v(p.l, p.a)}), coeff);
}

Complex log_csc2(const ParamSet& p) {
  Complex cn = csc(half_angle(p.n, p.l)), cm = csc(half_angle(p.m, p.l));
  return kPi * kPi * (cn * cn - cm * cm) / (2.0 * p.l * p.l);
}

Complex cot_form(const ParamSet& p) {
  return kPi * (cot(half_angle(p.m, p.l)) - cot(half_angle(p.n, p.l))) / (2.0 * p.l);
}

const std::vector<BoxEntry> kTrigBox = {
    {"n", real_range(0.0, 3.4)}, {"m", real_range(0.0, 3.4)}, {"l", real_range(1.5, 4.0)}};

}  // namespace

void add_master_entries(std::vector<CatalogEntry>& out) {
  {
    CatalogEntry e;
    e.id = "master";
    e.anchor = "Lerch closed form, general k and a";
    e.stated_hypothesis = "m, n, a, k, l complex";
    e.params = {"n", "m", "l", "k", "a"};
    e.free_params = e.params;
    e.difference_form = true;
    e.integrand_text = "(x^(2n) - x^(2m)) log^k(a x^2) / (x^(2l) - 1)";
    e.closed_form_text = "T(n) - T(m), T(u) = i 2^k pi^(k+1) (i/l)^k z_u Phi(z_u, -k, 1 - i l log(a)/(2 pi)) / l";
    ParamSet d1 = nml(1, 2, 3);
    ParamSet d2 = nml(0.3, 1.1, 2.5);
    d2.k = 2.0;
    d2.a = 1.7;
    ParamSet d3 = nml(0.3, 1.1, 2.5);
    d3.k = 3.0;
    d3.a = 0.6;
    e.defaults = {d1, d2, d3};
    e.sweep_box = {{"n", real_range(-0.4, 2.5)}, {"m", real_range(-0.4, 2.5)}, {"l", real_range(1.0, 3.5)},
                   {"k", int_range(0, 3)},       {"a", real_range(0.5, 2.0)}};
    e.sweep_margin = 0.1;
    e.check = [](const ParamSet& p, double margin) -> Check {
      if (auto c = check_a(p.a)) return c;
      if (auto c = strip_nml(p, margin)) return c;
      return check_k(p.k, margin);
    };
    e.integrand = [](const ParamSet& p, double x) {
      double L = std::log(x);
      return diff_ratio(2.0 * p.n, 2.0 * p.m, 2.0 * p.l, L) * log_ax2_pow(p.a, p.k, L);
    };
    e.extra_splits = [](const ParamSet& p) { return log_zero_split(p.a); };
    e.closed_form = [](const ParamSet& p, EvalTrace& tr) { return master_term(p.n, p, tr) - master_term(p.m, p, tr); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "log-csc2";
    e.anchor = "log(x^2) integral, csc^2 form";
    e.stated_hypothesis = "Re(m) < Re(l) and Re(n) < Re(l)";
    e.params = {"n", "m", "l"};
    e.free_params = e.params;
    e.difference_form = true;
    e.integrand_text = "log(x^2) (x^(2n) - x^(2m)) / (x^(2l) - 1)";
    e.closed_form_text = "pi^2 (csc^2((2 pi n + pi)/(2l)) - csc^2((2 pi m + pi)/(2l))) / (2 l^2)";
    e.defaults = {nml(0.3, 1.1, 2.5), nml(1, 2, 3)};
    e.sweep_box = kTrigBox;
    e.sweep_margin = 0.1;
    e.check = strip_nml;
    e.integrand = [](const ParamSet& p, double x) {
      double L = std::log(x);
      return diff_ratio(2.0 * p.n, 2.0 * p.m, 2.0 * p.l, L) * (2.0 * L);
    };
    e.closed_form = [](const ParamSet& p, EvalTrace&) { return log_csc2(p); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "grad-3.244.4";
    e.anchor = "Gradshteyn-Ryzhik 3.244.4";
    e.stated_hypothesis = "Re(m) < Re(l) and Re(n) < Re(l)";
    e.params = {"n", "m", "l"};
    e.free_params = e.params;
    e.difference_form = true;
    e.integrand_text = "(x^(2n) - x^(2m)) / (x^(2l) - 1)";
    e.closed_form_text = "pi (cot((2 pi m + pi)/(2l)) - cot((2 pi n + pi)/(2l))) / (2l)";
    e.defaults = {nml(1, 2, 3), nml(0.3, 1.1, 2.5)};
    e.sweep_box = kTrigBox;
    e.sweep_margin = 0.1;
    e.check = strip_nml;
    e.integrand = [](const ParamSet& p, double x) { return diff_ratio(2.0 * p.n, 2.0 * p.m, 2.0 * p.l, std::log(x)); };
    e.closed_form = [](const ParamSet& p, EvalTrace&) { return cot_form(p); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "grad-4.235.1";
    e.anchor = "Gradshteyn-Ryzhik 4.235.1";
    e.stated_hypothesis = "Re(n) > 1";
    e.params = {"n"};
    e.free_params = e.params;
    e.integrand_text = "(x - 1) x^(n-2) log(x) / (x^(2n) - 1)";
    e.closed_form_text = "-pi^2 tan^2(pi/(2n)) / (4 n^2)";
    for (double n : {3.0, 4.0, 5.0}) {
      ParamSet p;
      p.n = n;
      e.defaults.push_back(p);
    }
    e.sweep_box = {{"n", real_range(1.2, 6.0)}};
    e.sweep_margin = 0.1;
    e.check = [](const ParamSet& p, double margin) -> Check {
      if (!(p.n.real() > 1.0 + margin)) return "Re(n) <= 1";
      return std::nullopt;
    };
    e.integrand = [](const ParamSet& p, double x) {
      double L = std::log(x);
      // (x - 1) x^(n-2) = x^(n-1) - x^(n-2)
      return diff_ratio(p.n - 1.0, p.n - 2.0, 2.0 * p.n, L) * L;
    };
    e.closed_form = [](const ParamSet& p, EvalTrace&) {
      Complex t = std::tan(kPi / (2.0 * p.n));
      return -kPi * kPi * t * t / (4.0 * p.n * p.n);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "grad-4.235.2";
    e.anchor = "Gradshteyn-Ryzhik 4.235.2";
    e.stated_hypothesis = "Re(n) > Re(m) > 0";
    e.params = {"n", "m"};
    e.free_params = e.params;
    e.integrand_text = "(x^2 - 1) x^(m-1) log(x) / (x^(2n) - 1)";
    e.closed_form_text = "-pi^2 (csc^2(pi m/(2n)) - csc^2(pi (m+2)/(2n))) / (4 n^2)";
    for (double n : {3.0, 4.0, 5.0})
      for (double m : {1.0, 2.0}) {
        ParamSet p;
        p.n = n;
        p.m = m;
        e.defaults.push_back(p);
      }
    e.sweep_box = {{"n", real_range(1.5, 6.0)}, {"m", real_range(0.0, 6.0)}};
    e.sweep_margin = 0.1;
    e.check = [](const ParamSet& p, double margin) -> Check {
      if (!(p.m.real() > margin)) return "Re(m) <= 0";
      if (!(p.m.real() < 2.0 * p.n.real() - 2.0 - margin)) return "Re(m) >= 2 Re(n) - 2";
      return std::nullopt;
    };
    e.integrand = [](const ParamSet& p, double x) {
      double L = std::log(x);
      return diff_ratio(p.m + 1.0, p.m - 1.0, 2.0 * p.n, L) * L;
    };
    e.closed_form = [](const ParamSet& p, EvalTrace&) {
      Complex a = csc(kPi * p.m / (2.0 * p.n)), b = csc(kPi * (p.m + 2.0) / (2.0 * p.n));
      return -kPi * kPi * (a * a - b * b) / (4.0 * p.n * p.n);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "grad-4.235.3";
    e.anchor = "Gradshteyn-Ryzhik 4.235.3";
    e.stated_hypothesis = "Re(n) > 2 and Im(n) > 2";
    e.params = {"n"};
    e.free_params = e.params;
    e.integrand_text = "(x^2 - 1) x^(n-3) log(x) / (x^(2n) - 1)";
    e.closed_form_text = "-pi^2 tan^2(pi/n) / (4 n^2)";
    for (double n : {3.0, 4.0, 5.0}) {
      ParamSet p;
      p.n = n;
      e.defaults.push_back(p);
    }
    e.sweep_box = {{"n", real_range(2.2, 6.0)}};
    e.sweep_margin = 0.1;
    e.check = [](const ParamSet& p, double margin) -> Check {
      if (!(p.n.real() > 2.0 + margin)) return "Re(n) <= 2";
      return std::nullopt;
    };
    e.integrand = [](const ParamSet& p, double x) {
      double L = std::log(x);
      return diff_ratio(p.n - 1.0, p.n - 3.0, 2.0 * p.n, L) * L;
    };
    e.closed_form = [](const ParamSet& p, EvalTrace&) {
      Complex t = std::tan(kPi / p.n);
      return -kPi * kPi * t * t / (4.0 * p.n * p.n);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "polylog-form";
    e.anchor = "polylogarithm form, a = 1";
    e.stated_hypothesis = "a = 1 specialisation of the general closed form";
    e.params = {"n", "m", "l", "k"};
    e.free_params = e.params;
    e.difference_form = true;
    e.integrand_text = "log^k(x) (x^(2n) - x^(2m)) / (x^(2l) - 1)";
    e.closed_form_text = "pi^(k+1) (i/l)^(k-1) (Li_{-k}(z_m) - Li_{-k}(z_n)) / l^2";
    ParamSet d1 = nml(0.3, 1.1, 2.5);
    d1.k = 1.0;
    ParamSet d2 = nml(0.3, 1.1, 2.5);
    d2.k = 3.0;
    ParamSet d3 = nml(1, 2, 3);
    e.defaults = {d1, d2, d3};
    e.sweep_box = {{"n", real_range(0.0, 3.4)}, {"m", real_range(0.0, 3.4)}, {"l", real_range(1.5, 4.0)},
                   {"k", int_range(0, 3)}};
    e.sweep_margin = 0.1;
    e.check = [](const ParamSet& p, double margin) -> Check {
      if (auto c = strip_nml(p, margin)) return c;
      return check_k(p.k, margin);
    };
    e.integrand = [](const ParamSet& p, double x) {
      double L = std::log(x);
      return diff_ratio(2.0 * p.n, 2.0 * p.m, 2.0 * p.l, L) * cpow_principal(L, p.k);
    };
    e.closed_form = [](const ParamSet& p, EvalTrace& tr) {
      Complex coeff = cpow_principal(kPi, p.k + 1.0) * cpow_principal(kI / p.l, p.k - 1.0) / (p.l * p.l);
      return tr.use(polylog(-p.k, lerch_z(p.m, p.l)), coeff) - tr.use(polylog(-p.k, lerch_z(p.n, p.l)), coeff);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "log-trig-four-power";
    e.anchor = "four-power integrand over log x, log of a trigonometric ratio";
    e.stated_hypothesis = "m, n, p, q, l complex";
    e.params = {"m", "n", "p", "q", "l"};
    e.free_params = {"m", "n", "p", "l"};
    e.tolerance_class = ToleranceClass::branch_offset;
    e.integrand_text = "(x^(2m) - x^(2n) - x^(2p) + x^(2q)) / ((x^(2l) - 1) log(x))";
    e.closed_form_text =
        "log((cos(pi (n-p)/l) - cos(pi (n+p+1)/l)) e^(-i pi (m-n-p+q)/l) / (cos(pi (m-q)/l) - cos(pi (m+q+1)/l)))";
    ParamSet d;
    d.m = 0.2;
    d.n = 0.5;
    d.p = 1.0;
    d.q = 1.3;
    d.l = 3.0;
    e.defaults = {d};
    e.sweep_box = {{"m", real_range(0.0, 2.0)}, {"n", real_range(0.0, 2.0)}, {"p", real_range(0.0, 2.0)},
                   {"l", real_range(2.5, 4.0)}};
    e.sweep_margin = 0.1;
    e.derive = [](ParamSet& p) { p.q = p.n + p.p - p.m; };
    e.check = [](const ParamSet& p, double margin) -> Check {
      if (auto c = check_l(p.l)) return c;
      const std::pair<const char*, Complex> us[] = {{"m", p.m}, {"n", p.n}, {"p", p.p}, {"q", p.q}};
      for (const auto& [name, u] : us)
        if (auto c = check_pole(name, u, p.l)) return c;
      for (const auto& [name, u] : us)
        if (auto c = check_strip(name, u, p.l, margin)) return c;
      // Otherwise the numerator does not vanish at x = 1 and the log leaves a 1/(x-1) pole.
      if (std::abs(p.m - p.n - p.p + p.q) > 1e-12) return "m - n - p + q != 0";
      return std::nullopt;
    };
    e.integrand = [](const ParamSet& p, double x) {
      double L = std::log(x);
      Complex two_l = 2.0 * p.l;
      return (diff_ratio(2.0 * p.m, 2.0 * p.n, two_l, L) - diff_ratio(2.0 * p.p, 2.0 * p.q, two_l, L)) / L;
    };
    e.closed_form = [](const ParamSet& p, EvalTrace&) {
      const Complex l = p.l;
      Complex num = std::cos(kPi * (p.n - p.p) / l) - std::cos(kPi * (p.n + p.p + 1.0) / l);
      Complex den = std::cos(kPi * (p.m - p.q) / l) - std::cos(kPi * (p.m + p.q + 1.0) / l);
      Complex phase = std::exp(-kI * kPi * (p.m - p.n - p.p + p.q) / l);
      return principal_log(num * phase / den);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "nested-log";
    e.anchor = "nested log(log x), order derivative of Li_s at s = 0";
    e.stated_hypothesis = "fixed instance n = 1/2, m = 1/3, l = 2, a = 1; Li'_0 read as d/ds Li_s at s = 0";
    e.params = {"n", "m", "l"};
    e.tolerance_class = ToleranceClass::order_derivative;
    e.integrand_text = "(x - x^(2/3)) log(log(x)) / (x^4 - 1)";
    e.closed_form_text =
        "pi (4 ((1+2i) + i sqrt3) Li'_0((-1)^(5/6)) + (-sqrt3 + (2+i)) pi + (4 + 4i sqrt3) log(pi/2)) / (8 (sqrt3 + (2-i)))";
    e.defaults = {nml(0.5, 1.0 / 3.0, 2.0)};
    e.check = [names = e.params, fixed = e.defaults.front()](const ParamSet& p, double) {
      return check_fixed(names, fixed, p);
    };
    e.integrand = [](const ParamSet&, double x) {
      double L = std::log(x);
      return diff_ratio(1.0, 2.0 / 3.0, 4.0, L) * principal_log(Complex{L, 0.0});
    };
    e.closed_form = [](const ParamSet&, EvalTrace& tr) {
      const double s3 = std::sqrt(3.0);
      Complex c1 = 4.0 * (Complex{1.0, 2.0} + kI * s3);
      Complex c2 = (-s3 + Complex{2.0, 1.0}) * kPi;
      Complex c3 = (4.0 + 4.0 * kI * s3) * std::log(kPi / 2.0);
      Complex pre = kPi / (8.0 * (s3 + Complex{2.0, -1.0}));
      return tr.use(polylog_sderiv(0.0, cpow_principal(-1.0, 5.0 / 6.0)), pre * c1) + pre * (c2 + c3);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "log-squared-trig";
    e.anchor = "log^2(x) integral, trigonometric form";
    e.stated_hypothesis = "m, n, l complex";
    e.params = {"n", "m", "l"};
    e.free_params = e.params;
    e.difference_form = true;
    e.integrand_text = "log^2(x) (x^(2n) - x^(2m)) / (x^(2l) - 1)";
    e.closed_form_text = "-pi^3 csc^3(A_m) csc^3(A_n) (6 sin(pi (m-n)/l) - ...) / (32 l^3)";
    e.defaults = {nml(0.3, 1.1, 2.5), nml(1, 2, 3)};
    e.sweep_box = kTrigBox;
    e.sweep_margin = 0.1;
    e.check = strip_nml;
    e.integrand = [](const ParamSet& p, double x) {
      double L = std::log(x);
      return diff_ratio(2.0 * p.n, 2.0 * p.m, 2.0 * p.l, L) * (L * L);
    };
    e.closed_form = [](const ParamSet& p, EvalTrace&) {
      const Complex n = p.n, m = p.m, l = p.l;
      Complex cm = csc(half_angle(m, l)), cn = csc(half_angle(n, l));
      auto s = [&](Complex t) { return std::sin(kPi * t / l); };
      Complex bracket = 6.0 * s(m - n) - s(3.0 * m - n + 1.0) - s(3.0 * m + n + 2.0) + s(-m + 3.0 * n + 1.0) +
                        s(m + 3.0 * n + 2.0);
      return -(kPi * kPi * kPi * cm * cm * cm * cn * cn * cn * bracket) / (32.0 * l * l * l);
    };
    out.push_back(std::move(e));
  }
}

}  // namespace lerch::detail
