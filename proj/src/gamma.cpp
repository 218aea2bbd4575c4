// SPDX-License-Identifier: Apache-2.0
#include <array>
#include <cmath>

#include "lerch/errors.hpp"
#include "lerch/specfun.hpp"

namespace lerch {

namespace {

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

void check_pole(Complex s) {
  if (is_nonpositive_integer(s)) throw PoleError("Gamma pole at s = " + format_complex(s));
}

// log Gamma(s) for Re(s) >= 1/2.
Complex log_gamma_right(Complex s) {
  Complex z = s - 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

Complex log_gamma(Complex s) {
  check_pole(s);
  if (s.real() >= 0.5) return log_gamma_right(s);
  return std::log(kPi) - std::log(std::sin(kPi * s)) - log_gamma_right(1.0 - s);
}

Complex gamma(Complex s) {
  check_pole(s);
  if (s.real() >= 0.5) {
    auto k = as_integer(s);
    if (k && *k <= 20) {
      double f = 1.0;
      for (long long i = 2; i < *k; ++i) f *= static_cast<double>(i);
      return f;
    }
    return std::exp(log_gamma_right(s));
  }
  return kPi / (std::sin(kPi * s) * std::exp(log_gamma_right(1.0 - s)));
}

}  // namespace lerch
