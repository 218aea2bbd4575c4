// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <cmath>
#include <optional>

#include "detail.hpp"
#include "lerch/errors.hpp"
#include "lerch/quadrature.hpp"

namespace lerch {

namespace {

// B_{2k} / (2k)! for k = 1..13; the last entry only feeds the error estimate.
constexpr std::array<double, 13> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.2044840173323941e23,
    8553103.0 / 6.0 / 4.0329146112660565e26,
};

constexpr int kMaxShift = 64;
constexpr double kTailRadius = 30.0;

// Hermite: zeta(s,w) = w^-s/2 + w^(1-s)/(s-1)
//   - i * int_0^inf [(w - it)^-s - (w + it)^-s] / (e^(2 pi t) - 1) dt,  Re(w) > 0.
// No large partial sums, so Re(s) << 0 keeps its digits.
EvalResult hermite_tail(Complex s, Complex w) {
  Integrand f;
  const Complex w_pow = cpow_principal(w, -s);
  f.eval = [s, w, w_pow](double t) -> Complex {
    if (t == 0.0) return 0.0;
    double decay = 2.0 * kPi * t;
    if (t < 1.0) {
      // 2 w^-s (1 + u^2)^(-s/2) sin(s atan u) / (e^(2 pi t) - 1), u = t/w: no cancellation as t -> 0.
      Complex u = t / w;
      Complex half_log = 0.5 * (std::log(1.0 + kI * u) + std::log(1.0 - kI * u));
      return 2.0 * w_pow * std::exp(-s * half_log) * std::sin(s * std::atan(u)) / std::expm1(decay);
    }
    // Folding e^(-2 pi t) into the exponent keeps the far tail at 0 instead of inf/inf.
    Complex d = std::exp(-s * std::log(w - kI * t) - decay) - std::exp(-s * std::log(w + kI * t) - decay);
    return kI * d / std::expm1(-decay);
  };
  f.splits = {1.0};
  QuadratureOptions opts;
  opts.tol = 1e-14;
  QuadratureResult q = integrate_halfline(f, opts);
  if (!q.converged) throw UnsupportedRegime("Hurwitz zeta: Hermite integral did not converge");
  Complex head = 0.5 * w_pow + w * w_pow / (s - 1.0);
  double est = q.est_error + 8.0 * detail::kEps * (std::abs(head) + q.l1);
  return {head + q.value, est, Strategy::hermite_integral, q.nodes};
}

}  // namespace

EvalResult hurwitz_zeta(Complex s, Complex v) {
  if (s == Complex{1.0, 0.0}) throw PoleError("Hurwitz zeta pole at s = 1");
  if (!is_finite(s) || !is_finite(v)) throw DomainError("non-finite Hurwitz zeta argument");

  Complex sum = 0.0;
  double mag = 0.0;
  int terms = 0;
  Complex w = v;

  // Shift into Re(w) > 0.
  int shift = 0;
  while (w.real() <= 0.0) {
    if (shift == kMaxShift) throw UnsupportedRegime("Hurwitz zeta: Re(v) too negative to shift");
    if (is_nonpositive_integer(w)) throw PoleError("Hurwitz zeta pole: v + j = 0");
    Complex t = cpow_principal(w, -s);
    sum += t;
    mag += std::abs(t);
    w += 1.0;
    ++shift;
    ++terms;
  }

  const double radius = std::max(kTailRadius, std::abs(s) + 10.0);
  // For Re(s) < 0 the direct terms grow and cancel; Hermite's integral
  // cancels instead through e^(|Im s| arg). Keep whichever is tighter.
  std::optional<EvalResult> hermite;
  if (s.real() < 0.0 && w.real() < radius) {
    try {
      EvalResult h = hermite_tail(s, w);
      h.value += sum;
      h.est_error += 8.0 * detail::kEps * mag;
      h.terms_or_nodes += terms;
      hermite = h;
    } catch (const UnsupportedRegime&) {
    }
  }

  // Direct terms until the Euler-Maclaurin tail starts at Re(W) >= R.
  int direct = static_cast<int>(std::max(0.0, std::ceil(radius - w.real())));
  for (int j = 0; j < direct; ++j) {
    Complex t = cpow_principal(w + static_cast<double>(j), -s);
    sum += t;
    mag += std::abs(t);
    ++terms;
  }
  Complex big_w = w + static_cast<double>(direct);
  Complex log_w = std::log(big_w);
  Complex w_pow = std::exp(-s * log_w);  // W^-s
  Complex inv_w = 1.0 / big_w;
  Complex inv_w2 = inv_w * inv_w;

  Complex tail = big_w * w_pow / (s - 1.0) + 0.5 * w_pow;
  mag += std::abs(big_w * w_pow / (s - 1.0)) + std::abs(0.5 * w_pow);

  // sum_k B_2k/(2k)! (s)_{2k-1} W^{-s-2k+1}
  Complex rising = s;            // (s)_{2k-1}
  Complex power = w_pow * inv_w;  // W^{-s-2k+1}
  double next = 0.0;
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    Complex term = kBernoulliOverFactorial[k] * rising * power;
    if (k + 1 == kBernoulliOverFactorial.size()) {
      next = std::abs(term);
      break;
    }
    tail += term;
    mag += std::abs(term);
    double two_k = 2.0 * static_cast<double>(k + 1);
    rising *= (s + two_k - 1.0) * (s + two_k);
    power *= inv_w2;
  }
  Complex value = sum + tail;
  double est = next + 8.0 * detail::kEps * mag;
  if (hermite && hermite->est_error < est) return *hermite;
  return {value, est, Strategy::euler_maclaurin, terms};
}

EvalResult hurwitz_zeta_sderiv(Complex s, Complex v) {
  if (std::abs(s - 1.0) < 0.01) throw PoleError("zeta'(s, v) requested within 0.01 of s = 1");
  return detail::richardson_sderiv([&](Complex t) { return hurwitz_zeta(t, v); }, s);
}

EvalResult riemann_zeta(Complex s) { return hurwitz_zeta(s, 1.0); }

double glaisher() {
  static const double value = [] {
    EvalResult d = hurwitz_zeta_sderiv(-1.0, 1.0);
    return std::exp(1.0 / 12.0 - d.value.real());
  }();
  return value;
}

}  // namespace lerch
