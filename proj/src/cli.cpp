// SPDX-License-Identifier: Apache-2.0
#include "lerch/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lerch/errors.hpp"
#include "lerch/report.hpp"

namespace lerch {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string format = "text";
  std::string precision = "default";
  double tol = 0.0;
  bool timing = false;
  int threads = 0;
};

void add_common(CLI::App* cmd, Common& c, bool with_tol = true) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  if (!with_tol) return;
  cmd->add_option("--tol", c.tol, "Verdict tolerance (default: per tolerance class)")->check(CLI::PositiveNumber);
  cmd->add_option("--precision", c.precision, "Quadrature precision")
      ->check(CLI::IsMember({"fast", "default", "high"}));
  cmd->add_flag("--timing", c.timing, "Report wall time (output is then not reproducible)");
}

ParamSet base_params(const CatalogEntry& entry, const std::vector<std::string>& sets) {
  ParamSet p = entry.defaults.front();
  for (const auto& s : sets) {
    auto eq = s.find('=');
    std::string name = s.substr(0, eq);
    if (eq != std::string::npos &&
        std::find(entry.params.begin(), entry.params.end(), name) == entry.params.end())
      throw DomainError(entry.id + " has no parameter '" + name + "'");
    p.assign(s);
  }
  if (entry.derive) {
    bool q_given = std::any_of(sets.begin(), sets.end(), [](const std::string& s) { return s.rfind("q=", 0) == 0; });
    if (!q_given && !sets.empty()) entry.derive(p);
  }
  return p;
}

// name=lo:hi, name=lo:hi:int or name=relo:rehi:imlo:imhi
BoxEntry parse_box(const std::string& spec) {
  auto eq = spec.find('=');
  if (eq == std::string::npos) throw DomainError("box spec needs name=lo:hi, got '" + spec + "'");
  BoxEntry b;
  b.name = spec.substr(0, eq);
  std::vector<std::string> parts;
  std::stringstream ss(spec.substr(eq + 1));
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  auto number = [&](const std::string& s) {
    try {
      size_t used = 0;
      double v = std::stod(s, &used);
      if (used == s.size() && std::isfinite(v)) return v;
    } catch (const std::exception&) {
    }
    throw DomainError("bad number '" + s + "' in box spec '" + spec + "'");
  };
  if (parts.size() < 2 || parts.size() > 4) throw DomainError("box spec needs name=lo:hi, got '" + spec + "'");
  b.range.re_lo = number(parts[0]);
  b.range.re_hi = number(parts[1]);
  if (parts.size() == 3) {
    if (parts[2] != "int") throw DomainError("third box field must be 'int' in '" + spec + "'");
    b.range.integer = true;
  } else if (parts.size() == 4) {
    b.range.im_lo = number(parts[2]);
    b.range.im_hi = number(parts[3]);
  }
  if (b.range.re_hi < b.range.re_lo || b.range.im_hi < b.range.im_lo)
    throw DomainError("empty box range in '" + spec + "'");
  return b;
}

std::string wrap_json(const std::string& reports, const std::string* summary = nullptr) {
  Json j;
  j["schema"] = 1;
  j["reports"] = Json::parse(reports);
  if (summary) j["summary"] = Json::parse(*summary);
  return j.dump(2) + "\n";
}

int exit_code(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::fail) return kExitFail;
  return 0;
}

void emit(std::ostream& out, const std::vector<VerificationReport>& reports, const Common& c,
          const SweepSummary* summary = nullptr) {
  ReportFormat f = *parse_format(c.format);
  std::string body = render_report(reports, f, {c.timing});
  if (f == ReportFormat::json) {
    std::string s = summary ? render_summary(*summary, f) : std::string();
    out << wrap_json(body, summary ? &s : nullptr);
    return;
  }
  out << body;
  if (summary) out << (f == ReportFormat::csv ? "\n" : "") << render_summary(*summary, f);
}

std::vector<Complex> parse_args(const std::vector<std::string>& args) {
  std::vector<Complex> out;
  for (const auto& a : args) {
    auto v = parse_complex(a);
    if (!v) throw DomainError("not a complex literal: '" + a + "'");
    out.push_back(*v);
  }
  return out;
}

int run_eval(const std::string& fn, const std::vector<std::string>& raw, const std::string& format, std::ostream& out) {
  std::vector<Complex> a = parse_args(raw);
  auto need = [&](size_t n, const char* usage) {
    if (a.size() != n) throw CLI::ValidationError("eval " + fn + " expects --args " + usage);
  };
  EvalResult r;
  if (fn == "phi") {
    need(3, "z s v");
    r = lerch_phi({a[0], a[1], a[2]});
  } else if (fn == "polylog") {
    need(2, "s z");
    r = polylog(a[0], a[1]);
  } else if (fn == "hzeta") {
    need(2, "s v");
    r = hurwitz_zeta(a[0], a[1]);
  } else {
    need(1, "s");
    r = {lerch::gamma(a[0]), 0.0, Strategy::trivial, 0};
  }
  if (format == "json") {
    Json j;
    j["schema"] = 1;
    j["function"] = fn;
    Json args = Json::array();
    for (Complex z : a) args.push_back(Json{{"re", z.real()}, {"im", z.imag()}});
    j["args"] = args;
    j["value"] = Json{{"re", r.value.real()}, {"im", r.value.imag()}};
    j["est_error"] = r.est_error;
    j["strategy"] = std::string(to_string(r.strategy));
    j["terms_or_nodes"] = r.terms_or_nodes;
    out << j.dump(2) << "\n";
  } else {
    out << format_complex(r.value) << "  est_error=" << r.est_error << "  strategy=" << to_string(r.strategy) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadrature referee for Lerch-function integral identities", "lerch-verify"};
  app.require_subcommand(1);

  CLI::App* list = app.add_subcommand("list", "List catalog entries");
  std::string list_format = "text";
  list->add_option("--format", list_format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  Common vc;
  std::string v_entry;
  std::vector<std::string> v_sets;
  CLI::App* verify = app.add_subcommand("verify", "Compare quadrature with the closed form for one entry");
  verify->add_option("--entry", v_entry, "Entry id or alias")->required();
  verify->add_option("--set", v_sets, "Parameter override name=value (complex literal re[+im i])")
      ->allow_extra_args(false);
  add_common(verify, vc);

  Common sc;
  std::string s_entry;
  int s_count = 0;
  std::uint64_t s_seed = 0;
  std::vector<std::string> s_box;
  double s_margin = -1.0;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Randomized verification over a parameter box");
  sweep_cmd->add_option("--entry", s_entry, "Entry id or alias")->required();
  sweep_cmd->add_option("--count", s_count, "Number of samples")->required()->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--seed", s_seed, "64-bit seed")->required();
  sweep_cmd->add_option("--box", s_box, "Sampling range name=lo:hi[:int] or name=relo:rehi:imlo:imhi")
      ->allow_extra_args(false);
  sweep_cmd->add_option("--margin", s_margin, "Shrink open strips by this much when sampling");
  sweep_cmd->add_option("--threads", sc.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  add_common(sweep_cmd, sc);

  Common tc;
  CLI::App* table = app.add_subcommand("table", "Verify every table row at its default parameters");
  table->add_option("--threads", tc.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  add_common(table, tc);

  std::string e_fn, e_format = "text";
  std::vector<std::string> e_args;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a special function");
  eval->add_option("function", e_fn, "phi | polylog | hzeta | gamma")
      ->required()
      ->check(CLI::IsMember({"phi", "polylog", "hzeta", "gamma"}));
  eval->add_option("--args", e_args, "Complex arguments (phi: z s v, polylog: s z, hzeta: s v, gamma: s)")
      ->required();
  eval->add_option("--format", e_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  Common qc;
  std::string q_entry;
  std::vector<std::string> q_sets;
  CLI::App* quad = app.add_subcommand("quad", "Quadrature of an entry's integrand only");
  quad->add_option("--entry", q_entry, "Entry id or alias")->required();
  quad->add_option("--set", q_sets, "Parameter override name=value")->allow_extra_args(false);
  quad->add_option("--precision", qc.precision, "Quadrature precision")
      ->check(CLI::IsMember({"fast", "default", "high"}));
  quad->add_option("--format", qc.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lerch-verify: " << e.what() << "\n";
    for (CLI::App* sub : app.get_subcommands()) err << sub->help();
    if (app.get_subcommands().empty()) err << app.help();
    return kExitUsage;
  }

  try {
    if (list->parsed()) {
      auto entries = list_entries();
      if (list_format == "json") {
        Json arr = Json::array();
        for (const auto& e : entries)
          arr.push_back(Json{{"id", e.id}, {"anchor", e.anchor}, {"tolerance_class", to_string(e.tolerance_class)}});
        out << Json{{"schema", 1}, {"entries", arr}}.dump(2) << "\n";
      } else if (list_format == "csv") {
        out << "id,tolerance_class,anchor\n";
        for (const auto& e : entries) out << e.id << "," << to_string(e.tolerance_class) << ",\"" << e.anchor << "\"\n";
      } else {
        size_t w = 0;
        for (const auto& e : entries) w = std::max(w, e.id.size());
        for (const auto& e : entries) {
          std::string cls(to_string(e.tolerance_class));
          out << e.id << std::string(w - e.id.size() + 2, ' ') << cls << std::string(18 - cls.size(), ' ') << e.anchor
              << "\n";
        }
      }
      return 0;
    }
    if (verify->parsed()) {
      const CatalogEntry& entry = find_entry(v_entry);
      ParamSet p = base_params(entry, v_sets);
      std::vector<VerificationReport> reports{verify_entry(entry.id, p, vc.tol, *parse_precision(vc.precision))};
      emit(out, reports, vc);
      return exit_code(reports);
    }
    if (sweep_cmd->parsed()) {
      SweepSpec spec;
      spec.entry_id = find_entry(s_entry).id;
      spec.count = s_count;
      spec.seed = s_seed;
      for (const auto& b : s_box) spec.box.push_back(parse_box(b));
      spec.margin = s_margin;
      spec.tol = sc.tol;
      spec.precision = *parse_precision(sc.precision);
      spec.threads = sc.threads;
      SweepResult res = sweep(spec);
      emit(out, res.reports, sc, &res.summary);
      return exit_code(res.reports);
    }
    if (table->parsed()) {
      auto reports = run_table(tc.tol, *parse_precision(tc.precision), tc.threads);
      emit(out, reports, tc);
      return exit_code(reports);
    }
    if (eval->parsed()) return run_eval(e_fn, e_args, e_format, out);
    if (quad->parsed()) {
      const CatalogEntry& entry = find_entry(q_entry);
      ParamSet p = base_params(entry, q_sets);
      QuadratureResult q = integrate_halfline(make_integrand(entry.id, p), quadrature_options(*parse_precision(qc.precision)));
      if (qc.format == "json") {
        Json j{{"schema", 1},
               {"entry_id", entry.id},
               {"lhs", Json{{"re", q.value.real()}, {"im", q.value.imag()}}},
               {"converged", q.converged},
               {"est_error", q.est_error},
               {"nodes", q.nodes},
               {"level", q.level},
               {"nonfinite", q.nonfinite}};
        out << j.dump(2) << "\n";
      } else {
        out << format_complex(q.value) << "  est_error=" << q.est_error << "  converged=" << (q.converged ? "yes" : "no")
            << "  nodes=" << q.nodes << "  level=" << q.level << "\n";
      }
      return q.converged ? 0 : kExitFail;
    }
  } catch (const CLI::ValidationError& e) {
    err << "lerch-verify: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "lerch-verify: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lerch
