// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "detail.hpp"
#include "lerch/errors.hpp"

namespace lerch {

namespace {

bool on_positive_cut(Complex z) { return z.imag() == 0.0 && z.real() >= 1.0; }

}  // namespace

EvalResult polylog_jonquiere(Complex s, Complex z) {
  if (z.imag() == 0.0 && z.real() >= 0.0) throw BranchError("Jonquiere route needs z off [0, inf)");
  if (auto k = as_integer(s); k && *k >= 1) throw PoleError("Jonquiere route: Gamma(1 - s) pole");
  if (s == Complex{0.0, 0.0}) throw PoleError("Jonquiere route: zeta(1, v) pole at s = 0");

  const Complex w = principal_log(-z) / (2.0 * kPi * kI);
  const Complex t = 1.0 - s;
  EvalResult z1 = hurwitz_zeta(t, 0.5 + w);
  EvalResult z2 = hurwitz_zeta(t, 0.5 - w);
  const Complex c1 = std::exp(t * kI * (kPi / 2.0));   // i^{1-s}
  const Complex c2 = std::exp(-t * kI * (kPi / 2.0));  // i^{s-1}
  const Complex pre = gamma(t) / cpow_principal(2.0 * kPi, t);
  const Complex a = c1 * z1.value;
  const Complex b = c2 * z2.value;
  const Complex value = pre * (a + b);
  const double ap = std::abs(pre);
  const double est = ap * (std::abs(c1) * z1.est_error + std::abs(c2) * z2.est_error) +
                     16.0 * detail::kEps * ap * (std::abs(a) + std::abs(b));
  return {value, est, Strategy::jonquiere, z1.terms_or_nodes + z2.terms_or_nodes};
}

EvalResult polylog(Complex s, Complex z, const WorkBudget& budget) {
  if (on_positive_cut(z)) throw BranchError("polylog: z on the cut [1, inf)");
  if (z == Complex{0.0, 0.0}) return {0.0, 0.0, Strategy::trivial, 0};
  if (std::abs(z) > 0.99 && s.real() <= 0.0 && !is_nonpositive_integer(s)) return polylog_jonquiere(s, z);
  EvalResult phi = lerch_phi({z, s, 1.0}, budget);
  double az = std::abs(z);
  return {z * phi.value, az * phi.est_error, phi.strategy, phi.terms_or_nodes};
}

EvalResult polylog_sderiv(Complex s, Complex z, const WorkBudget& budget) {
  if (on_positive_cut(z)) throw BranchError("polylog derivative: z on the cut [1, inf)");
  if (z == Complex{0.0, 0.0}) return {0.0, 0.0, Strategy::trivial, 0};
  if (std::abs(z) > 1.0 + 1e-12) throw DomainError("polylog derivative requires |z| <= 1");
  if (std::abs(z) > 0.99) return detail::richardson_sderiv([&](Complex t) { return polylog_jonquiere(t, z); }, s);
  return detail::richardson_sderiv([&](Complex t) { return polylog(t, z, budget); }, s);
}

}  // namespace lerch
