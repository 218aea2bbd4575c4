// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lerch/catalog.hpp"

namespace lerch::detail {

using Check = std::optional<std::string>;

/// x^p / (x^q - 1) from L = log x, without overflow at either end.
Complex power_ratio(Complex p, Complex q, double L);

/// (x^p1 - x^p2) / (x^q - 1) from L = log x; expm1 forms near x = 1.
Complex diff_ratio(Complex p1, Complex p2, Complex q, double L);

/// log^k(a x^2), principal branch.
Complex log_ax2_pow(Complex a, Complex k, double L);

/// e^{i pi (2u + 1) / l}
Complex lerch_z(Complex u, Complex l);

/// 1 - i l log(a) / (2 pi)
Complex lerch_v(Complex l, Complex a);

Check check_l(Complex l);
Check check_a(Complex a);
Check check_pole(const char* name, Complex u, Complex l);
/// -1/2 < Re(u) < Re(l) - 1/2, shrunk by margin.
Check check_strip(const char* name, Complex u, Complex l, double margin);
/// Re(k) > -1, shrunk by margin.
Check check_k(Complex k, double margin);

/// Split at 1/sqrt(a) for real a > 0, a != 1 (zero of log(a x^2)).
std::vector<double> log_zero_split(Complex a);

/// Parameters must match the single default instance.
Check check_fixed(const std::vector<std::string>& names, const ParamSet& fixed, const ParamSet& given);

ParamRange real_range(double lo, double hi);
ParamRange int_range(int lo, int hi);

void add_master_entries(std::vector<CatalogEntry>& out);
void add_logdenom_entries(std::vector<CatalogEntry>& out);
void add_productlog_entries(std::vector<CatalogEntry>& out);
/// Table rows reuse the entries registered before them.
void add_table_entries(std::vector<CatalogEntry>& out);

}  // namespace lerch::detail
