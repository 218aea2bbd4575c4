// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "detail.hpp"
#include "lerch/errors.hpp"

namespace lerch {

namespace detail {

namespace {

constexpr int kMaxOrder = 64;

// Pascal row C(n, 0..n) as doubles; exact up to n = 64 within double range
// of magnitude (C(64,32) ~ 1.8e18 rounds, harmless at this accuracy).
std::vector<double> binomial_row(int n) {
  std::vector<double> row(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k < n; ++k) row[k] = row[k - 1] * static_cast<double>(n - k + 1) / k;
  return row;
}

}  // namespace

ValueWithError apostol_bernoulli_bounded(int n, Complex v, Complex lambda) {
  if (n < 0) throw DomainError("Apostol-Bernoulli order must be non-negative");
  if (n > kMaxOrder) throw OverflowError("Apostol-Bernoulli order above 64");

  const bool classical = lambda == Complex{1.0, 0.0};
  // Numbers b_j = B_j(0; lambda) from (lambda e^t - 1) G(t) = t:
  //   (lambda - 1) b_j + lambda sum_{i<j} C(j,i) b_i = [j == 1].
  // The classical case divides out one power of t instead:
  //   sum_{i<=j} C(j+1, i) b_i = [j == 0].
  std::vector<Complex> b(static_cast<std::size_t>(n) + 1);
  std::vector<double> err(b.size(), 0.0);
  for (int j = 0; j <= n; ++j) {
    if (classical) {
      auto c = binomial_row(j + 1);
      Complex acc = (j == 0) ? 1.0 : 0.0;
      double mag = 0.0;
      double prop = 0.0;
      for (int i = 0; i < j; ++i) {
        acc -= c[i] * b[i];
        mag += c[i] * std::abs(b[i]);
        prop += c[i] * err[i];
      }
      b[j] = acc / c[j];
      err[j] = (kEps * mag + prop) / c[j];
    } else {
      auto c = binomial_row(j);
      Complex acc = 0.0;
      double mag = 0.0;
      double prop = 0.0;
      for (int i = 0; i < j; ++i) {
        acc += c[i] * b[i];
        mag += c[i] * std::abs(b[i]);
        prop += c[i] * err[i];
      }
      Complex rhs = (j == 1 ? 1.0 : 0.0) - lambda * acc;
      Complex denom = lambda - 1.0;
      b[j] = rhs / denom;
      err[j] = (kEps * (std::abs(lambda) * mag + std::abs(rhs)) + std::abs(lambda) * prop) / std::abs(denom) +
               kEps * std::abs(b[j]);
    }
  }

  // B_n(v; lambda) = sum_k C(n,k) b_k v^{n-k}, Horner in v.
  auto c = binomial_row(n);
  Complex value = 0.0;
  double mag = 0.0;
  double prop = 0.0;
  double av = std::abs(v);
  for (int k = 0; k <= n; ++k) {
    value = value * v + c[k] * b[k];
    mag = mag * av + c[k] * std::abs(b[k]);
    prop = prop * av + c[k] * err[k];
  }
  return {value, prop + 4.0 * (n + 1) * kEps * mag};
}

}  // namespace detail

Complex apostol_bernoulli(int n, Complex v, Complex lambda) {
  return detail::apostol_bernoulli_bounded(n, v, lambda).value;
}

}  // namespace lerch
