// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace lerch::detail {

template <class F>
EvalResult richardson_sderiv(F&& f, Complex s) {
  constexpr std::array<double, 3> kSteps = {1e-3, 5e-4, 2.5e-4};
  std::array<Complex, 3> d{};
  double noise = 0.0;
  int work = 0;
  for (std::size_t i = 0; i < kSteps.size(); ++i) {
    double h = kSteps[i];
    EvalResult hi = f(s + h);
    EvalResult lo = f(s - h);
    d[i] = (hi.value - lo.value) / (2.0 * h);
    noise = std::max(noise, (hi.est_error + lo.est_error) / (2.0 * h));
    work += hi.terms_or_nodes + lo.terms_or_nodes;
  }
  // Central differences carry even powers of h only.
  Complex r1a = (4.0 * d[1] - d[0]) / 3.0;
  Complex r1b = (4.0 * d[2] - d[1]) / 3.0;
  Complex r2 = (16.0 * r1b - r1a) / 15.0;
  // Extrapolation weights amplify per-point noise by at most ~3.
  double est = std::abs(r2 - r1b) + 3.0 * noise;
  return {r2, est, Strategy::richardson, work};
}

}  // namespace lerch::detail
