// SPDX-License-Identifier: Apache-2.0
#include "lerch/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lerch/errors.hpp"

namespace lerch {

namespace {

constexpr int kTableLevels = 13;  // levels 0..12
constexpr double kTinyWeight = 1e-300;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHalfPi = kPi / 2.0;

struct Node {
  double t;
  double offset;  // tanh-sinh: 1 - tanh(u); exp-sinh: x - lo
  double weight;  // dx/dt for the unit map
};

using LevelTable = std::vector<std::vector<Node>>;

// Abscissae t of level L: all integers for L = 0, odd multiples of 2^-L after.
template <class Make>
LevelTable build_levels(double t_lo, double t_hi, Make make) {
  LevelTable table(kTableLevels);
  for (int level = 0; level < kTableLevels; ++level) {
    double h = std::ldexp(1.0, -level);
    long long first = static_cast<long long>(std::ceil(t_lo / h));
    long long last = static_cast<long long>(std::floor(t_hi / h));
    for (long long j = first; j <= last; ++j) {
      if (level > 0 && (j % 2 == 0)) continue;
      double t = static_cast<double>(j) * h;
      Node n = make(t);
      if (n.weight >= kTinyWeight && n.offset > 0.0) table[level].push_back(n);
    }
  }
  return table;
}

// Symmetric in t, so only t >= 0 is tabulated.
const LevelTable& tanh_sinh_table() {
  static const LevelTable table = build_levels(0.0, 6.2, [](double t) {
    double u = kHalfPi * std::sinh(t);
    double e = std::exp(-2.0 * u);
    double comp = 2.0 * e / (1.0 + e);
    double weight = kHalfPi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    return Node{t, comp, weight};
  });
  return table;
}

const LevelTable& exp_sinh_table() {
  // e^{(pi/2) sinh t} spans about [1e-300, 1e200] on this range.
  static const LevelTable table = build_levels(-6.8, 6.4, [](double t) {
    double x = std::exp(kHalfPi * std::sinh(t));
    return Node{t, x, kHalfPi * std::cosh(t) * x};
  });
  return table;
}

struct Accumulator {
  Complex sum;
  double l1 = 0.0;
  int nodes = 0;
  int nonfinite = 0;

  void add(const RealFunction& f, double x, double w) {
    Complex y = f(x);
    if (!is_finite(y)) {
      ++nonfinite;
      return;
    }
    sum += w * y;
    l1 += w * std::abs(y);
    ++nodes;
  }
};

template <class LevelSum>
QuadratureResult run_levels(LevelSum level_sum, const QuadratureOptions& opts) {
  if (!(opts.tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  const int max_level = std::clamp(opts.max_level, 1, kTableLevels - 1);
  QuadratureResult r;
  Complex estimate;
  double l1 = 0.0;
  for (int level = 0; level <= max_level; ++level) {
    double h = std::ldexp(1.0, -level);
    Accumulator acc = level_sum(level);
    Complex next = (level == 0 ? 0.0 : 0.5 * estimate) + h * acc.sum;
    l1 = (level == 0 ? 0.0 : 0.5 * l1) + h * acc.l1;
    r.nodes += acc.nodes;
    r.nonfinite += acc.nonfinite;
    if (level == 0) {
      r.history.push_back(std::numeric_limits<double>::infinity());
    } else {
      r.history.push_back(std::abs(next - estimate));
    }
    estimate = next;
    r.level = level;
    r.value = estimate;
    r.l1 = l1;
    // The level difference cannot resolve error below the rounding of the sum.
    r.est_error = std::max(r.history.back(), 4.0 * kEps * l1);
    if (level >= opts.min_level) {
      double floor = 64.0 * kEps * l1;
      if (r.history.back() <= opts.tol * std::abs(estimate) || r.history.back() <= floor) {
        r.converged = r.nonfinite == 0;
        break;
      }
    }
  }
  return r;
}

}  // namespace

QuadratureResult tanh_sinh(const RealFunction& f, double lo, double hi, const QuadratureOptions& opts) {
  if (!(lo < hi)) throw DomainError("tanh_sinh requires lo < hi");
  const double half = 0.5 * (hi - lo);
  const double mid = lo + half;
  const auto& table = tanh_sinh_table();
  return run_levels(
      [&](int level) {
        Accumulator acc;
        for (const Node& n : table[level]) {
          double w = half * n.weight;
          if (n.t == 0.0) {
            acc.add(f, mid, w);
            continue;
          }
          double d = half * n.offset;
          double right = hi - d;
          double left = lo + d;
          if (right < hi && right > lo) acc.add(f, right, w);
          if (left > lo && left < hi) acc.add(f, left, w);
        }
        return acc;
      },
      opts);
}

QuadratureResult exp_sinh(const RealFunction& f, double lo, const QuadratureOptions& opts) {
  const auto& table = exp_sinh_table();
  return run_levels(
      [&](int level) {
        Accumulator acc;
        for (const Node& n : table[level]) {
          double x = lo + n.offset;
          if (x > lo && std::isfinite(x)) acc.add(f, x, n.weight);
        }
        return acc;
      },
      opts);
}

QuadratureResult integrate_halfline(const Integrand& f, const QuadratureOptions& opts) {
  std::vector<double> splits = f.splits;
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
  if (std::find(splits.begin(), splits.end(), 1.0) == splits.end())
    throw DomainError("half-line integrand must be split at x = 1");
  if (splits.front() <= 0.0) throw DomainError("split points must be positive");

  std::vector<QuadratureResult> legs;
  double lo = 0.0;
  for (double s : splits) {
    legs.push_back(tanh_sinh(f.eval, lo, s, opts));
    lo = s;
  }
  legs.push_back(exp_sinh(f.eval, lo, opts));

  QuadratureResult total;
  total.converged = true;
  std::size_t depth = 0;
  for (const auto& leg : legs) depth = std::max(depth, leg.history.size());
  total.history.assign(depth, 0.0);
  for (const auto& leg : legs) {
    total.value += leg.value;
    total.est_error += leg.est_error;
    total.l1 += leg.l1;
    total.nodes += leg.nodes;
    total.nonfinite += leg.nonfinite;
    total.level = std::max(total.level, leg.level);
    total.converged = total.converged && leg.converged;
    for (std::size_t i = 0; i < depth; ++i)
      total.history[i] += leg.history[std::min(i, leg.history.size() - 1)];
  }
  return total;
}

}  // namespace lerch
