// Copyright 2026 The Skyblight Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skyblight/metrics/report.h"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "skyblight/core/error.h"
#include "skyblight/core/image_io.h"

namespace skyblight {
namespace {

std::optional<double> TryApCor(const EvalTable& t) {
  try {
    return ApCor(t);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<double> TryKindMean(const EvalTable& t, CorruptionKind kind) {
  try {
    return KindMean(t, kind);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string Cell(const std::optional<double>& v) {
  return v ? FormatPercent(*v) : "-";
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void CheckNonEmpty(const std::vector<EvalTable>& tables) {
  if (tables.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "report needs at least one table");
  }
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  WriteFileBytes(path, std::span<const std::uint8_t>(
                           reinterpret_cast<const std::uint8_t*>(text.data()),
                           text.size()));
}

}  // namespace

std::string FormatPercent(double ap) {
  const long long tenths = std::llround(ap * 1000.0);
  if (tenths == 0) return "0.0";
  const long long mag = std::llabs(tenths);
  return std::string(tenths < 0 ? "-" : "") + std::to_string(mag / 10) + "." +
         std::to_string(mag % 10);
}

std::string RenderMarkdownReport(const std::vector<EvalTable>& tables) {
  CheckNonEmpty(tables);
  std::ostringstream md;
  md << "# Corruption robustness report\n\n"
     << "Metric: AP@0.5, all-point interpolation. Values in percent.\n\n"
     << "## Summary\n\n"
     << "| Model | AP_clean | AP_cor | Drop (points) |\n"
     << "|---|---|---|---|\n";
  for (const EvalTable& t : tables) {
    const auto cor = TryApCor(t);
    std::optional<double> drop;
    if (cor && t.ap_clean()) drop = Degradation(*t.ap_clean(), *cor);
    md << "| " << t.model() << " | " << Cell(t.ap_clean()) << " | "
       << Cell(cor) << " | " << Cell(drop) << " |\n";
  }

  md << "\n## Per corruption\n\n| Group | Corruption |";
  for (const EvalTable& t : tables) md << " " << t.model() << " |";
  md << "\n|---|---|";
  for (std::size_t i = 0; i < tables.size(); ++i) md << "---|";
  md << "\n| None | AP_clean |";
  for (const EvalTable& t : tables) md << " " << Cell(t.ap_clean()) << " |";
  md << "\n";
  std::string_view last_group;
  for (CorruptionKind kind : kAllKinds) {
    const std::string_view group = KindGroup(kind);
    md << "| " << (group == last_group ? "" : std::string(group)) << " | "
       << KindName(kind) << " |";
    last_group = group;
    for (const EvalTable& t : tables) md << " " << Cell(TryKindMean(t, kind)) << " |";
    md << "\n";
  }
  md << "| AP_cor | |";
  for (const EvalTable& t : tables) md << " " << Cell(TryApCor(t)) << " |";
  md << "\n";
  return md.str();
}

std::string RenderCsvReport(const std::vector<EvalTable>& tables) {
  CheckNonEmpty(tables);
  std::ostringstream csv;
  csv << "section,model,group,corruption,severity,ap_percent\n";
  auto row = [&](std::string_view section, const EvalTable& t,
                 std::string_view group, std::string_view corruption,
                 const std::string& severity, const std::optional<double>& v) {
    csv << section << "," << CsvField(t.model()) << "," << CsvField(std::string(group))
        << "," << corruption << "," << severity << "," << (v ? FormatPercent(*v) : "")
        << "\n";
  };
  for (const EvalTable& t : tables) {
    const auto cor = TryApCor(t);
    std::optional<double> drop;
    if (cor && t.ap_clean()) drop = Degradation(*t.ap_clean(), *cor);
    row("summary", t, "", "AP_clean", "", t.ap_clean());
    row("summary", t, "", "AP_cor", "", cor);
    row("summary", t, "", "drop_points", "", drop);
    for (CorruptionKind kind : t.kinds()) {
      row("matrix", t, KindGroup(kind), KindName(kind), "mean",
          TryKindMean(t, kind));
      for (Severity sev : kAllSeverities) {
        if (const auto ap = t.Get(kind, sev)) {
          row("cell", t, KindGroup(kind), KindName(kind),
              std::to_string(sev.level()), ap);
        }
      }
    }
  }
  return csv.str();
}

void WriteReports(const std::vector<EvalTable>& tables,
                  const std::filesystem::path& out_dir) {
  CheckNonEmpty(tables);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error(ErrorCode::kIoFailure,
                "cannot create " + out_dir.string() + ": " + ec.message());
  }
  WriteText(out_dir / kReportCsvFile, RenderCsvReport(tables));
  WriteText(out_dir / kReportMarkdownFile, RenderMarkdownReport(tables));
  WriteText(out_dir / kEvalTableFile, SerializeEvalTables(tables));
}

}  // namespace skyblight
