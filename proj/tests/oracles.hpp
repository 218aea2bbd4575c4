// SPDX-License-Identifier: Apache-2.0
#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's evaluation paths.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

/// Neville extrapolation to h = 0 of samples f(h_i).
inline Complex extrapolate_to_zero(const std::vector<double>& h, std::vector<Complex> f) {
  const std::size_t n = h.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      f[i] = (h[i - k] * f[i] - h[i] * f[i - 1]) / (h[i - k] - h[i]);
      if (i == k) break;
    }
  return f[n - 1];
}

/// Abel sum lim_{r->1-} sum_n c(n) (r z)^n, for z on the unit circle away
/// from 1, by summing at r = 1 - delta and extrapolating in delta.
inline Complex abel_sum(const std::function<Complex(int)>& c, Complex z) {
  std::vector<double> deltas;
  std::vector<Complex> values;
  for (double delta = 0.04; deltas.size() < 7; delta *= 0.5) {
    double r = 1.0 - delta;
    Complex sum = 0.0;
    Complex w = 1.0;
    for (int n = 0; n < 200000; ++n) {
      Complex t = c(n) * w;
      sum += t;
      if (n > 50 && std::abs(t) < 1e-18 * std::abs(sum)) break;
      w *= r * z;
    }
    deltas.push_back(delta);
    values.push_back(sum);
  }
  return extrapolate_to_zero(deltas, values);
}

/// Forward-mode dual number for real-argument derivatives.
struct Dual {
  double v;
  double d;
};
inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
inline Dual operator/(Dual a, Dual b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }
inline Dual pow_const_base(double base, Dual e) {
  double p = std::pow(base, e.v);
  return {p, p * std::log(base) * e.d};
}

/// Riemann zeta(s) and its s-derivative for real s != 1 via a separate
/// Euler-Maclaurin sum with N = 50, differentiated exactly by dual numbers.
inline Dual riemann_zeta_dual(double s) {
  constexpr int N = 50;
  const double b2k[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
  Dual S{s, 1.0};
  Dual sum{0.0, 0.0};
  for (int n = 1; n < N; ++n) sum = sum + pow_const_base(static_cast<double>(n), Dual{-s, -1.0});
  Dual nm = pow_const_base(N, Dual{-s, -1.0});
  sum = sum + Dual{static_cast<double>(N), 0.0} * nm / (S - Dual{1.0, 0.0}) + Dual{0.5, 0.0} * nm;
  Dual rising = S;
  Dual power = nm / Dual{static_cast<double>(N), 0.0};
  double fact = 2.0;
  for (int k = 1; k <= 8; ++k) {
    sum = sum + Dual{b2k[k - 1] / fact, 0.0} * rising * power;
    double a = 2.0 * k - 1.0, b = 2.0 * k;
    rising = rising * (S + Dual{a, 0.0}) * (S + Dual{b, 0.0});
    power = power / Dual{static_cast<double>(N) * N, 0.0};
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  return sum;
}

/// Polynomial in z with complex coefficients, lowest degree first.
using Poly = std::vector<Complex>;

inline Complex eval(const Poly& p, Complex z) {
  Complex r = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * z + *it;
  return r;
}

/// (v + z d/dz)^k applied to 1/(1-z), evaluated at z. Carries P_j with
/// F_j = P_j(z) / (1-z)^{j+1}; each step maps
///   P -> (v P + z P')(1 - z) + (j+1) z P.
inline Complex euler_operator_geometric(int k, Complex v, Complex z) {
  Poly p{1.0};
  for (int j = 0; j < k; ++j) {
    Poly q(p.size() + 1, 0.0);
    Poly t(p.size(), 0.0);  // v P + z P'
    for (std::size_t i = 0; i < p.size(); ++i) t[i] = v * p[i] + static_cast<double>(i) * p[i];
    for (std::size_t i = 0; i < t.size(); ++i) {
      q[i] += t[i];
      q[i + 1] -= t[i];
      q[i + 1] += static_cast<double>(j + 1) * p[i];
    }
    p = q;
  }
  return eval(p, z) / std::pow(1.0 - z, k + 1);
}

}  // namespace oracle
