// SPDX-License-Identifier: Apache-2.0
#include "lerch/complex.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "lerch/errors.hpp"

namespace lerch {

Complex principal_log(Complex z) {
  if (z == Complex{0.0, 0.0}) throw DomainError("log(0)");
  double arg = std::atan2(z.imag(), z.real());
  if (arg == -kPi) arg = kPi;
  return {std::log(std::abs(z)), arg};
}

namespace {

Complex int_pow(Complex base, long long n) {
  bool invert = n < 0;
  unsigned long long e = invert ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
  Complex result{1.0, 0.0};
  while (e) {
    if (e & 1ULL) result *= base;
    base *= base;
    e >>= 1ULL;
  }
  return invert ? 1.0 / result : result;
}

}  // namespace

Complex cpow_principal(Complex base, Complex expo) {
  if (base == Complex{0.0, 0.0}) {
    if (expo.real() > 0.0) return {0.0, 0.0};
    throw DomainError("0^s with Re(s) <= 0");
  }
  if (expo.imag() == 0.0 && std::abs(expo.real()) <= 64.0) {
    double r = expo.real();
    if (r == std::nearbyint(r)) return int_pow(base, static_cast<long long>(r));
  }
  return std::exp(expo * principal_log(base));
}

Complex cexpm1(Complex w) {
  double a = w.real();
  double b = w.imag();
  if (std::abs(a) > 0.5 || std::abs(b) > 0.5) return std::exp(w) - 1.0;
  double sb2 = std::sin(0.5 * b);
  double re = std::expm1(a) * std::cos(b) - 2.0 * sb2 * sb2;
  double im = std::exp(a) * std::sin(b);
  return {re, im};
}

std::optional<long long> as_integer(Complex z, double tol) {
  if (std::abs(z.imag()) > tol) return std::nullopt;
  double r = std::nearbyint(z.real());
  if (std::abs(z.real() - r) > tol || std::abs(r) > 9.0e15) return std::nullopt;
  return static_cast<long long>(r);
}

namespace {

// Parses a leading double, returning the number of characters consumed.
std::size_t parse_double(std::string_view s, double& out) {
  std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return static_cast<std::size_t>(end - buf.c_str());
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  bool imaginary = text.back() == 'i' || text.back() == 'j';
  if (!imaginary) {
    double re = 0.0;
    if (parse_double(text, re) != text.size()) return std::nullopt;
    return Complex{re, 0.0};
  }
  text.remove_suffix(1);
  // Find the sign that separates real and imaginary parts; skip an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    char c = text[i];
    if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_of = [](std::string_view t) -> std::optional<double> {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    double v = 0.0;
    if (parse_double(t, v) != t.size()) return std::nullopt;
    return v;
  };
  if (split == std::string_view::npos) {
    auto im = imag_of(text);
    if (!im) return std::nullopt;
    return Complex{0.0, *im};
  }
  double re = 0.0;
  auto real_part = text.substr(0, split);
  if (parse_double(real_part, re) != real_part.size()) return std::nullopt;
  auto im = imag_of(text.substr(split));
  if (!im) return std::nullopt;
  return Complex{re, *im};
}

std::string format_complex(Complex z) {
  auto fmt = [](double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
  };
  if (z.imag() == 0.0) return fmt(z.real());
  std::string im = fmt(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return fmt(z.real()) + im + "i";
}

}  // namespace lerch
