// SPDX-License-Identifier: Apache-2.0
#pragma once

// Lerch transcendent and relatives for complex arguments.
//
// Every routine uses the principal branch (arg in (-pi, pi]) for powers and
// logarithms. Results carrying an error estimate are returned as EvalResult;
// est_error is an estimate of the absolute error, not a rigorous bound.
// All functions are pure and safe to call concurrently.

#include <string>
#include <string_view>
#include <vector>

#include "lerch/complex.hpp"

namespace lerch {

enum class Strategy {
  series,              // direct power series in z
  apostol_bernoulli,   // closed form at non-positive integer s
  conditional_series,  // |z| ~ 1, accelerated partial sums
  integral_rep,        // Laplace-type integral, Re(s) > 0
  euler_maclaurin,     // Hurwitz zeta, Re(s) >= 0
  hermite_integral,    // Hurwitz zeta, Re(s) < 0
  jonquiere,           // polylog through two Hurwitz zeta values
  richardson,          // extrapolated central difference in s
  trivial,             // exact special case (z = 0, ...)
};

std::string_view to_string(Strategy s);

struct EvalResult {
  Complex value;
  double est_error = 0.0;
  Strategy strategy = Strategy::trivial;
  int terms_or_nodes = 0;
};

struct LerchArgs {
  Complex z;
  Complex s;
  Complex v;
};

struct WorkBudget {
  int max_terms = 100000;
  int quad_max_level = 12;
  /// Run every applicable Lerch strategy and throw Error if any pair
  /// disagrees beyond combined est_error (plus a small roundoff allowance).
  bool cross_check = false;
};

/// Complex Gamma (Lanczos, reflection for Re(s) < 1/2). Throws PoleError at
/// non-positive integers.
Complex gamma(Complex s);
Complex log_gamma(Complex s);

/// Hurwitz zeta by Euler-Maclaurin summation. For Re(v) <= 0 the argument is
/// shifted with zeta(s,v) = v^-s + zeta(s,v+1), at most 64 steps.
EvalResult hurwitz_zeta(Complex s, Complex v);

/// d/ds zeta(s, v) by Richardson-extrapolated central differences.
EvalResult hurwitz_zeta_sderiv(Complex s, Complex v);

EvalResult riemann_zeta(Complex s);

/// Apostol-Bernoulli polynomial B_n(v; lambda), the coefficients of
/// t e^{vt} / (lambda e^t - 1). lambda == 1 gives the classical Bernoulli
/// polynomials. Throws OverflowError for n > 64.
Complex apostol_bernoulli(int n, Complex v, Complex lambda);

/// Lerch transcendent Phi(z, s, v) = sum_{n>=0} z^n (v+n)^-s and its
/// continuation. Dispatch, first match wins:
///   series              |z| <= 0.99
///   apostol_bernoulli   s in {0, -1, -2, ...}, z != 1
///   conditional_series  0.99 < |z| <= 1, z != 1, Re(s) > 0
///   integral_rep        Re(s) > 0, Re(v) > 0, |z| <= 1, z not in [1, inf)
/// Throws UnsupportedRegime outside these, PoleError for v in {0,-1,...}.
EvalResult lerch_phi(const LerchArgs& args, const WorkBudget& budget = {});

/// Runs one named strategy; throws UnsupportedRegime if it does not apply.
EvalResult lerch_phi_via(Strategy strategy, const LerchArgs& args, const WorkBudget& budget = {});

/// Strategies whose preconditions hold for args, in dispatch order.
std::vector<Strategy> applicable_strategies(const LerchArgs& args);

/// Li_s(z) = z Phi(z, s, 1). For |z| > 0.99 and Re(s) <= 0 non-integer the
/// Jonquiere inversion is used. Throws BranchError for z in [1, inf).
EvalResult polylog(Complex s, Complex z, const WorkBudget& budget = {});

/// Li_s(z) through Gamma(1-s) and zeta(1-s, 1/2 +- log(-z)/(2 pi i)).
/// Valid for z not in [0, inf) and s not a positive integer.
EvalResult polylog_jonquiere(Complex s, Complex z);

/// d/ds Li_s(z), |z| <= 1, z not in [1, inf). On the unit circle every
/// stencil point goes through the Jonquiere route.
EvalResult polylog_sderiv(Complex s, Complex z, const WorkBudget& budget = {});

/// Glaisher-Kinkelin constant exp(1/12 - zeta'(-1)), computed once.
double glaisher();

}  // namespace lerch
