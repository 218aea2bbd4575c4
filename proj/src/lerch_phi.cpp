// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <string>

#include "detail.hpp"
#include "lerch/errors.hpp"
#include "lerch/quadrature.hpp"

namespace lerch {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::series: return "series";
    case Strategy::apostol_bernoulli: return "apostol_bernoulli";
    case Strategy::conditional_series: return "conditional_series";
    case Strategy::integral_rep: return "integral_rep";
    case Strategy::euler_maclaurin: return "euler_maclaurin";
    case Strategy::hermite_integral: return "hermite_integral";
    case Strategy::jonquiere: return "jonquiere";
    case Strategy::richardson: return "richardson";
    case Strategy::trivial: return "trivial";
  }
  return "unknown";
}

namespace {

using detail::kEps;

constexpr double kSeriesRadius = 0.99;
constexpr double kUnitSlack = 1e-12;
constexpr int kMaxWynnRows = 80;

bool near_one(Complex z) { return std::abs(z - 1.0) <= kUnitSlack; }

bool on_positive_cut(Complex z) { return z.imag() == 0.0 && z.real() >= 1.0; }

bool applies(Strategy strategy, const LerchArgs& a) {
  const double r = std::abs(a.z);
  switch (strategy) {
    case Strategy::series: return r <= kSeriesRadius;
    case Strategy::apostol_bernoulli: return is_nonpositive_integer(a.s) && !near_one(a.z);
    case Strategy::conditional_series:
      return r > kSeriesRadius && r <= 1.0 + kUnitSlack && !near_one(a.z) && a.s.real() > 0.0;
    case Strategy::integral_rep:
      return a.s.real() > 0.0 && a.v.real() > 0.0 && r <= 1.0 + kUnitSlack && !near_one(a.z) && !on_positive_cut(a.z);
    default: return false;
  }
}

EvalResult phi_series(const LerchArgs& a, const WorkBudget& budget) {
  const double r = std::abs(a.z);
  if (r == 0.0) return {cpow_principal(a.v, -a.s), kEps * std::abs(cpow_principal(a.v, -a.s)), Strategy::trivial, 1};
  const double abs_s = std::abs(a.s);
  // Past this index the term ratio is bounded by q < 1.
  const double settle = 2.0 * abs_s / (1.0 - r) + 2.0;
  Complex sum = 0.0;
  Complex zn = 1.0;
  double mag = 0.0;
  for (int n = 0; n < budget.max_terms; ++n) {
    Complex w = a.v + static_cast<double>(n);
    Complex term = zn * cpow_principal(w, -a.s);
    sum += term;
    double at = std::abs(term);
    mag += at;
    double aw = std::abs(w);
    if (aw > settle) {
      double q = r * std::exp(abs_s / (aw - 1.0));
      if (q < 1.0) {
        double tail = at * q / (1.0 - q);
        if (tail <= 0.5 * kEps * std::abs(sum) || at == 0.0) {
          return {sum, tail + 8.0 * kEps * mag, Strategy::series, n + 1};
        }
      }
    }
    zn *= a.z;
  }
  throw UnsupportedRegime("Lerch series: term budget exhausted");
}

EvalResult phi_apostol_bernoulli(const LerchArgs& a) {
  long long k = -*as_integer(a.s);
  auto b = detail::apostol_bernoulli_bounded(static_cast<int>(k + 1), a.v, a.z);
  double scale = static_cast<double>(k + 1);
  return {-b.value / scale, b.error / scale, Strategy::apostol_bernoulli, static_cast<int>(k + 2)};
}

// Wynn epsilon on the partial sums S_p, S_2p, ... with p ~ pi/|arg z|, which
// turns the subsequence into a nearly alternating one.
EvalResult phi_conditional(const LerchArgs& a, const WorkBudget& budget) {
  double arg = std::abs(std::arg(a.z));
  int stride = 1;
  if (arg > 0.0) stride = static_cast<int>(std::clamp(std::round(kPi / arg), 1.0, 1000.0));

  std::vector<Complex> diag;  // diag[k] = eps_k at the current antidiagonal
  Complex partial = 0.0;
  Complex zn = 1.0;
  int n = 0;
  double scale = 0.0;
  Complex last;
  bool have_last = false;
  int agree = 0;
  double worst = 0.0;
  Complex best;
  double best_diff = std::numeric_limits<double>::infinity();

  for (int row = 0; row < kMaxWynnRows && n + stride <= budget.max_terms; ++row) {
    for (int j = 0; j < stride; ++j, ++n) {
      partial += zn * cpow_principal(a.v + static_cast<double>(n), -a.s);
      zn *= a.z;
    }
    scale = std::max(scale, std::abs(partial));

    std::vector<Complex> next{partial};
    next.reserve(diag.size() + 1);
    for (std::size_t k = 0; k < diag.size(); ++k) {
      Complex d = next[k] - diag[k];
      if (d == Complex{0.0, 0.0}) break;
      Complex above = k >= 1 ? diag[k - 1] : Complex{0.0, 0.0};
      Complex e = above + 1.0 / d;
      if (!is_finite(e)) break;
      next.push_back(e);
    }
    diag = std::move(next);
    std::size_t top = (diag.size() - 1) & ~std::size_t{1};
    Complex estimate = diag[top];

    if (have_last) {
      double diff = std::abs(estimate - last);
      if (diff < best_diff && row >= 3) {
        best_diff = diff;
        best = estimate;
      }
      if (diff <= 1e-14 * std::max(std::abs(estimate), 1e-300)) {
        worst = std::max(worst, diff);
        if (++agree >= 3) {
          double est = worst + 16.0 * kEps * std::max(std::abs(estimate), scale);
          return {estimate, est, Strategy::conditional_series, n};
        }
      } else {
        agree = 0;
        worst = 0.0;
      }
    }
    last = estimate;
    have_last = true;
  }
  if (best_diff < 1e-8 * std::abs(best)) {
    return {best, best_diff + 16.0 * kEps * scale, Strategy::conditional_series, n};
  }
  throw UnsupportedRegime("Lerch conditional series did not converge within budget");
}

EvalResult phi_integral(const LerchArgs& a, const WorkBudget& budget) {
  const Complex z = a.z;
  const Complex v = a.v;
  const Complex sm1 = a.s - 1.0;
  auto g = [&](double t) { return std::exp(-v * t) / (1.0 - z * std::exp(-t)); };
  const Complex g0 = 1.0 / (1.0 - z);
  QuadratureOptions opts{1e-13, budget.quad_max_level, 3};
  auto near = tanh_sinh([&](double t) { return std::exp(sm1 * std::log(t)) * (g(t) - g0); }, 0.0, 1.0, opts);
  auto far = exp_sinh([&](double t) { return std::exp(sm1 * std::log(t) - v * t) / (1.0 - z * std::exp(-t)); }, 1.0, opts);
  Complex integral = near.value + g0 / a.s + far.value;
  Complex gs = gamma(a.s);
  Complex value = integral / gs;
  double est = (near.est_error + far.est_error) / std::abs(gs) + 16.0 * kEps * std::abs(value);
  if (!near.converged || !far.converged) throw UnsupportedRegime("Lerch integral representation did not converge");
  return {value, est, Strategy::integral_rep, near.nodes + far.nodes};
}

void check_pole(const LerchArgs& a) {
  if (is_nonpositive_integer(a.v)) throw PoleError("Lerch Phi pole: v in {0, -1, -2, ...}");
  if (!is_finite(a.z) || !is_finite(a.s) || !is_finite(a.v)) throw DomainError("non-finite Lerch argument");
}

}  // namespace

std::vector<Strategy> applicable_strategies(const LerchArgs& args) {
  std::vector<Strategy> out;
  for (Strategy s : {Strategy::series, Strategy::apostol_bernoulli, Strategy::conditional_series, Strategy::integral_rep})
    if (applies(s, args)) out.push_back(s);
  return out;
}

EvalResult lerch_phi_via(Strategy strategy, const LerchArgs& args, const WorkBudget& budget) {
  check_pole(args);
  if (!applies(strategy, args))
    throw UnsupportedRegime("strategy " + std::string(to_string(strategy)) + " does not apply");
  switch (strategy) {
    case Strategy::series: return phi_series(args, budget);
    case Strategy::apostol_bernoulli: return phi_apostol_bernoulli(args);
    case Strategy::conditional_series: return phi_conditional(args, budget);
    case Strategy::integral_rep: return phi_integral(args, budget);
    default: throw UnsupportedRegime("not a Lerch strategy");
  }
}

EvalResult lerch_phi(const LerchArgs& args, const WorkBudget& budget) {
  check_pole(args);
  auto strategies = applicable_strategies(args);
  if (strategies.empty()) {
    throw UnsupportedRegime("Lerch Phi: no strategy for z = " + format_complex(args.z) +
                            ", s = " + format_complex(args.s) + ", v = " + format_complex(args.v));
  }
  EvalResult first = lerch_phi_via(strategies.front(), args, budget);
  if (budget.cross_check) {
    for (std::size_t i = 1; i < strategies.size(); ++i) {
      EvalResult other = lerch_phi_via(strategies[i], args, budget);
      double allowed = first.est_error + other.est_error + 64.0 * kEps * (std::abs(first.value) + std::abs(other.value));
      if (std::abs(first.value - other.value) > allowed) {
        throw Error("Lerch strategies disagree: " + std::string(to_string(first.strategy)) + " vs " +
                    std::string(to_string(other.strategy)));
      }
    }
  }
  return first;
}

}  // namespace lerch
