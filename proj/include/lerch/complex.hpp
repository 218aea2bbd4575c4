// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace lerch {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Principal logarithm with arg in (-pi, pi]. Unlike std::log, a negative
/// real argument carrying a signed zero imaginary part (-x, -0.0) maps to
/// +i*pi, never -i*pi. Throws DomainError at 0.
Complex principal_log(Complex z);

/// exp(expo * principal_log(base)). Integral real exponents are evaluated by
/// repeated squaring so that (-1)^2 is exactly 1. Throws DomainError for
/// 0^expo with Re(expo) <= 0.
Complex cpow_principal(Complex base, Complex expo);

/// exp(w) - 1 without cancellation for small |w|.
Complex cexpm1(Complex w);

/// If z is (within tol) a real integer, returns it.
std::optional<long long> as_integer(Complex z, double tol = 0.0);

inline bool is_nonpositive_integer(Complex z, double tol = 0.0) {
  auto k = as_integer(z, tol);
  return k && *k <= 0;
}

/// Parses "re", "re+imi", "re-imi", "imi", "i", "-i". Returns nullopt on
/// malformed input.
std::optional<Complex> parse_complex(std::string_view text);

/// Shortest round-trip text form, "re" or "re+imi".
std::string format_complex(Complex z);

}  // namespace lerch
