// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>

#include "lerch/specfun.hpp"

namespace lerch::detail {

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

struct ValueWithError {
  Complex value;
  double error = 0.0;
};

/// B_n(v; lambda) with a first-order bound on the accumulated rounding error.
ValueWithError apostol_bernoulli_bounded(int n, Complex v, Complex lambda);

/// Richardson-extrapolated central difference of f around s with steps
/// h, h/2, h/4 (h = 1e-3).
template <class F>
EvalResult richardson_sderiv(F&& f, Complex s);

}  // namespace lerch::detail

#include "richardson.ipp"
