// SPDX-License-Identifier: Apache-2.0
#include "lerch/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cmath>

#include "json.hpp"

namespace lerch {

namespace {

using Json = nlohmann::ordered_json;

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

// Shortest round-trip; "nan" / "inf" spelled out for csv and text.
std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string short_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string short_complex(Complex z) {
  if (!is_finite(z)) return "nan";
  char buf[64];
  if (z.imag() == 0.0)
    std::snprintf(buf, sizeof buf, "%.12g", z.real());
  else
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::string params_text(const VerificationReport& r) {
  std::string out;
  for (const auto& name : r.param_names) {
    if (!out.empty()) out += ';';
    out += name + "=" + format_complex(r.params.get(name));
  }
  return out;
}

std::string join(const std::vector<std::string>& v, char sep) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json report_json(const VerificationReport& r, const RenderOptions& opt) {
  Json params = Json::object();
  for (const auto& name : r.param_names) params[name] = complex_json(r.params.get(name));
  Json j;
  j["entry_id"] = r.entry_id;
  j["tolerance_class"] = std::string(to_string(r.tolerance_class));
  j["params"] = params;
  j["lhs"] = complex_json(r.lhs);
  j["rhs"] = complex_json(r.rhs);
  j["abs_residual"] = r.abs_residual;
  j["rel_residual"] = r.rel_residual;
  j["tolerance"] = r.tolerance;
  j["lhs_diag"] = Json{{"converged", r.lhs_diag.converged},
                       {"est_error", r.lhs_diag.est_error},
                       {"nodes", r.lhs_diag.nodes},
                       {"level", r.lhs_diag.level},
                       {"nonfinite", r.lhs_diag.nonfinite}};
  j["rhs_diag"] = r.rhs_diag;
  j["rhs_est_error"] = r.rhs_est_error;
  j["verdict"] = std::string(to_string(r.verdict));
  j["message"] = r.message;
  j["wall_time"] = opt.timing ? Json(r.wall_time) : Json(nullptr);
  return j;
}

std::string render_json(const std::vector<VerificationReport>& reports, const RenderOptions& opt) {
  if (reports.empty()) return "[]";
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_json(r, opt));
  return arr.dump(2);
}

std::string render_csv(const std::vector<VerificationReport>& reports, const RenderOptions& opt) {
  std::string out =
      "entry_id,tolerance_class,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,tolerance,"
      "lhs_converged,lhs_est_error,lhs_nodes,lhs_level,rhs_diag,rhs_est_error,verdict,message,wall_time\n";
  for (const auto& r : reports) {
    std::vector<std::string> f = {r.entry_id,
                                  std::string(to_string(r.tolerance_class)),
                                  params_text(r),
                                  num(r.lhs.real()),
                                  num(r.lhs.imag()),
                                  num(r.rhs.real()),
                                  num(r.rhs.imag()),
                                  num(r.abs_residual),
                                  num(r.rel_residual),
                                  num(r.tolerance),
                                  r.lhs_diag.converged ? "true" : "false",
                                  num(r.lhs_diag.est_error),
                                  std::to_string(r.lhs_diag.nodes),
                                  std::to_string(r.lhs_diag.level),
                                  join(r.rhs_diag, ';'),
                                  num(r.rhs_est_error),
                                  std::string(to_string(r.verdict)),
                                  r.message,
                                  opt.timing ? num(r.wall_time) : ""};
    for (size_t i = 0; i < f.size(); ++i) {
      if (i) out += ',';
      out += csv_field(f[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_text(const std::vector<VerificationReport>& reports, const RenderOptions& opt) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"entry", "params", "lhs (quadrature)", "rhs (closed form)", "residual", "verdict"};
  if (opt.timing) head.push_back("time/s");
  rows.push_back(head);
  for (const auto& r : reports) {
    double residual = std::abs(r.rhs) >= kNearZeroRhs ? r.rel_residual : r.abs_residual;
    std::vector<std::string> row = {r.entry_id, params_text(r), short_complex(r.lhs), short_complex(r.rhs),
                                    std::isfinite(residual) ? short_num(residual) : "-", std::string(to_string(r.verdict))};
    if (opt.timing) row.push_back(short_num(r.wall_time));
    rows.push_back(row);
  }
  std::vector<size_t> width(head.size(), 0);
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + '\n';
  }
  for (const auto& r : reports)
    if (!r.message.empty() && r.verdict != Verdict::pass) out += r.entry_id + ": " + r.message + '\n';
  return out;
}

}  // namespace

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  return std::nullopt;
}

std::string render_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                          const RenderOptions& options) {
  switch (format) {
    case ReportFormat::json: return render_json(reports, options);
    case ReportFormat::csv: return render_csv(reports, options);
    case ReportFormat::text: return render_text(reports, options);
  }
  return {};
}

std::string render_summary(const SweepSummary& s, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      Json j{{"count", s.count},
             {"pass", s.pass},
             {"fail", s.fail},
             {"unsupported", s.unsupported},
             {"discrepancy_documented", s.discrepancy},
             {"pass_rate", s.pass_rate},
             {"max_abs_residual", s.max_abs_residual},
             {"max_rel_residual", s.max_rel_residual},
             {"attempts", s.attempts},
             {"rejection_rate", s.rejection_rate}};
      return j.dump(2);
    }
    case ReportFormat::csv:
      return "count,pass,fail,unsupported,discrepancy_documented,pass_rate,max_abs_residual,max_rel_residual,attempts,"
             "rejection_rate\n" +
             std::to_string(s.count) + ',' + std::to_string(s.pass) + ',' + std::to_string(s.fail) + ',' +
             std::to_string(s.unsupported) + ',' + std::to_string(s.discrepancy) + ',' + num(s.pass_rate) + ',' +
             num(s.max_abs_residual) + ',' + num(s.max_rel_residual) + ',' + std::to_string(s.attempts) + ',' +
             num(s.rejection_rate) + '\n';
    case ReportFormat::text: {
      char buf[256];
      std::snprintf(buf, sizeof buf,
                    "%d samples: %d pass, %d fail, %d unsupported, %d discrepancy-documented; pass rate %.3g; "
                    "max residual %.3g abs, %.3g rel; rejection rate %.3g\n",
                    s.count, s.pass, s.fail, s.unsupported, s.discrepancy, s.pass_rate, s.max_abs_residual,
                    s.max_rel_residual, s.rejection_rate);
      return buf;
    }
  }
  return {};
}

}  // namespace lerch
