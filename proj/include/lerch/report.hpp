// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lerch/verify.hpp"

namespace lerch {

enum class ReportFormat { text, json, csv };

std::optional<ReportFormat> parse_format(std::string_view name);

struct RenderOptions {
  /// wall_time is null (json) or empty (csv, text) unless set, so output is
  /// reproducible byte for byte.
  bool timing = false;
};

/// json: array of flat objects, complex values as {"re", "im"}.
/// csv: header plus one line per report. text: aligned columns.
std::string render_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                          const RenderOptions& options = {});

std::string render_summary(const SweepSummary& summary, ReportFormat format);

}  // namespace lerch
