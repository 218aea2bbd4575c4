// SPDX-License-Identifier: Apache-2.0
#include <string>

#include "lerch/catalog.hpp"
#include "lerch/errors.hpp"

namespace lerch {

namespace {

Complex ParamSet::*member(std::string_view name) {
  if (name == "n") return &ParamSet::n;
  if (name == "m") return &ParamSet::m;
  if (name == "l") return &ParamSet::l;
  if (name == "k") return &ParamSet::k;
  if (name == "a") return &ParamSet::a;
  if (name == "p") return &ParamSet::p;
  if (name == "q") return &ParamSet::q;
  if (name == "alpha") return &ParamSet::alpha;
  throw DomainError("unknown parameter '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& ParamSet::names() {
  static const std::vector<std::string> all{"n", "m", "l", "k", "a", "p", "q", "alpha"};
  return all;
}

Complex ParamSet::get(std::string_view name) const { return this->*member(name); }

void ParamSet::set(std::string_view name, Complex value) { this->*member(name) = value; }

void ParamSet::assign(std::string_view spec) {
  auto eq = spec.find('=');
  if (eq == std::string_view::npos) throw DomainError("expected name=value, got '" + std::string(spec) + "'");
  auto value = parse_complex(spec.substr(eq + 1));
  if (!value) throw DomainError("not a complex literal: '" + std::string(spec.substr(eq + 1)) + "'");
  set(spec.substr(0, eq), *value);
}

std::string_view to_string(ToleranceClass c) {
  switch (c) {
    case ToleranceClass::classical: return "classical";
    case ToleranceClass::branch_offset: return "branch-offset";
    case ToleranceClass::order_derivative: return "order-derivative";
  }
  return "unknown";
}

double default_tolerance(ToleranceClass c) { return c == ToleranceClass::classical ? 1e-10 : 1e-8; }

Complex EvalTrace::use(const EvalResult& r, Complex coeff) {
  strategies.push_back(r.strategy);
  est_error += std::abs(coeff) * r.est_error;
  return coeff * r.value;
}

std::vector<std::string> EvalTrace::tags() const {
  std::vector<std::string> out;
  for (Strategy s : strategies) {
    std::string t(to_string(s));
    bool seen = false;
    for (const auto& o : out) seen = seen || o == t;
    if (!seen) out.push_back(t);
  }
  return out;
}

}  // namespace lerch
