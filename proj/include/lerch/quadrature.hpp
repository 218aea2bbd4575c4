// SPDX-License-Identifier: Apache-2.0
#pragma once

// Double-exponential quadrature for complex-valued integrands on (lo, hi)
// and (lo, inf). The rules are open: the integrand is never evaluated at an
// endpoint, and abscissae that round onto an endpoint are dropped. Integrands
// are evaluated at x, not at the distance to the endpoint, so an algebraic
// singularity at the upper limit loses about sqrt(eps) to the dropped nodes;
// the catalog integrands are regular at their upper split points.

#include <functional>
#include <vector>

#include "lerch/complex.hpp"

namespace lerch {

using RealFunction = std::function<Complex(double)>;

struct QuadratureResult {
  Complex value;
  double est_error = 0.0;
  int nodes = 0;
  int level = 0;
  bool converged = false;
  /// est_error after each level, index = level (level 0 has no estimate and
  /// stores +inf).
  std::vector<double> history;
  /// Nodes whose integrand value was not finite; any makes converged false.
  int nonfinite = 0;
  /// Quadrature of |f|; scale for rounding error in value.
  double l1 = 0.0;
};

/// A catalog integrand with the interior points where it must be split.
struct Integrand {
  RealFunction eval;
  std::vector<double> splits;
};

struct QuadratureOptions {
  double tol = 1e-10;  // relative
  int max_level = 12;
  int min_level = 3;
};

/// tanh-sinh on (lo, hi). Levels halve the step; stops once two successive
/// levels agree to tol relative, or the difference reaches the rounding floor
/// of the node sum.
QuadratureResult tanh_sinh(const RealFunction& f, double lo, double hi, const QuadratureOptions& opts = {});

/// exp-sinh on (lo, inf) for integrands with integrable decay.
QuadratureResult exp_sinh(const RealFunction& f, double lo, const QuadratureOptions& opts = {});

/// Integral over (0, inf) split at every point of f.splits (which must
/// contain 1): tanh-sinh on each finite leg, exp-sinh on the last.
QuadratureResult integrate_halfline(const Integrand& f, const QuadratureOptions& opts = {});

}  // namespace lerch
