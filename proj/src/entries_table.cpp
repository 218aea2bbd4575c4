// SPDX-License-Identifier: Apache-2.0
// The 15 table rows, each a copy of the entry it restates.
#include <stdexcept>

#include "catalog_detail.hpp"

namespace lerch::detail {

namespace {

struct Row {
  const char* base;
  const char* alias;  // nullptr when the row has only its numbered id
  bool negate;        // the row prints -integrand and -closed form
  const char* integrand_text;
  const char* closed_form_text;
};

const Row kRows[15] = {
    {"polylog-form", nullptr, false, nullptr, nullptr},
    {"grad-3.244.4", nullptr, false, nullptr, nullptr},
    {"log-csc2", nullptr, false, nullptr, nullptr},
    {"grad-4.235.1", nullptr, true, "-(x - 1) x^(n-2) log(x) / (x^(2n) - 1)", "pi^2 tan^2(pi/(2n)) / (4 n^2)"},
    {"grad-4.235.2", nullptr, true, "-(x^2 - 1) x^(m-1) log(x) / (x^(2n) - 1)",
     "pi^2 (csc^2(pi m/(2n)) - csc^2(pi (m+2)/(2n))) / (4 n^2)"},
    {"log-trig-four-power", nullptr, false, nullptr, nullptr},
    {"nested-log", nullptr, false, nullptr, nullptr},
    {"log-denominator-ex1-log", "table-row-ex1-log", false, nullptr, nullptr},
    {"log-denominator-ex1-plain", "table-row-ex1-plain", false, nullptr, nullptr},
    {"log-denominator-ex2-log", "table-row-ex2-log", false, nullptr, nullptr},
    {"log-denominator-ex2-plain", "table-row-ex2-plain", false, nullptr, nullptr},
    {"log-denominator-ex3-plain", "table-row-ex3-plain", false, nullptr, nullptr},
    {"log-log-zeta-ex1", "table-row-zeta-ex1", false, nullptr, nullptr},
    {"log-log-zeta-ex2", "table-row-zeta-ex2", false, nullptr, nullptr},
    {"log-log-zeta-ex3", "table-row-zeta-ex3", false, nullptr, nullptr},
};

const CatalogEntry& base_entry(const std::vector<CatalogEntry>& out, const char* id) {
  for (const auto& e : out)
    if (e.id == id) return e;
  throw std::logic_error(std::string("table row base missing: ") + id);
}

}  // namespace

void add_table_entries(std::vector<CatalogEntry>& out) {
  std::vector<CatalogEntry> rows;
  for (int i = 0; i < 15; ++i) {
    const Row& r = kRows[i];
    CatalogEntry e = base_entry(out, r.base);
    e.id = "table-row-" + std::to_string(i + 1);
    e.anchor = "table of integrals, row " + std::to_string(i + 1) + " (" + r.base + ")";
    e.aliases.clear();
    if (r.alias) e.aliases.push_back(r.alias);
    e.table_row = i + 1;
    if (r.integrand_text) e.integrand_text = r.integrand_text;
    if (r.closed_form_text) e.closed_form_text = r.closed_form_text;
    if (r.negate) {
      e.integrand = [f = e.integrand](const ParamSet& p, double x) { return -f(p, x); };
      e.closed_form = [f = e.closed_form](const ParamSet& p, EvalTrace& tr) { return -f(p, tr); };
    }
    rows.push_back(std::move(e));
  }
  for (auto& e : rows) out.push_back(std::move(e));
}

}  // namespace lerch::detail
