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

#ifndef SKYBLIGHT_METRICS_REPORT_H_
#define SKYBLIGHT_METRICS_REPORT_H_

#include <filesystem>
#include <string>
#include <vector>

#include "skyblight/metrics/eval_table.h"

namespace skyblight {

inline constexpr char kReportCsvFile[] = "report.csv";
inline constexpr char kReportMarkdownFile[] = "report.md";
inline constexpr char kEvalTableFile[] = "eval_table.json";

// AP in [0, 1] as a percentage with one decimal, halves rounded away from
// zero: 0.41343 -> "41.3".
std::string FormatPercent(double ap);

// Summary (model, AP_clean, AP_cor, drop) followed by the per-corruption
// matrix: one column per model, corruption rows grouped by weather / sensor
// noise / defocus, a clean row and a final AP_cor row. Missing values
// render as "-". Throws kInvalidArgument on an empty table list.
std::string RenderMarkdownReport(const std::vector<EvalTable>& tables);

// Long form, header "section,model,group,corruption,severity,ap_percent".
std::string RenderCsvReport(const std::vector<EvalTable>& tables);

// Writes report.csv, report.md and eval_table.json into out_dir.
void WriteReports(const std::vector<EvalTable>& tables,
                  const std::filesystem::path& out_dir);

}  // namespace skyblight

#endif  // SKYBLIGHT_METRICS_REPORT_H_
