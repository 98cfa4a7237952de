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

#ifndef SKYBLIGHT_PIPELINE_GRID_H_
#define SKYBLIGHT_PIPELINE_GRID_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "skyblight/core/manifest.h"
#include "skyblight/core/types.h"
#include "skyblight/corruption/schedule.h"
#include "skyblight/corruption/visibility.h"

namespace skyblight {

inline constexpr char kGridReportFile[] = "grid_report.json";
inline constexpr char kCellManifestFile[] = "manifest.json";
inline constexpr char kVisibilityReportFile[] = "visibility_report.json";

struct GridPlan {
  std::filesystem::path manifest_path;
  // Directory that manifest file_name entries are relative to.
  std::filesystem::path images_root;
  std::vector<CorruptionKind> kinds{kAllKinds.begin(), kAllKinds.end()};
  std::vector<Severity> severities{kAllSeverities.begin(),
                                   kAllSeverities.end()};
  std::filesystem::path out_dir;
  std::uint64_t global_seed = 0;
  int workers = 1;
  ParamSchedule schedule = ParamSchedule::Default();
  double visibility_threshold = kDefaultVisibilityThreshold;
};

// Throws kInvalidArgument: empty kinds/severities, duplicates, workers < 1,
// empty manifest path, bad threshold; with writes_outputs also an empty
// out_dir or one resolving to the dataset root. Schedule errors surface as
// kInvalidSchedule.
void ValidatePlan(const GridPlan& plan, bool writes_outputs = true);

// out/<kind>/<severity>
std::filesystem::path CellDir(const std::filesystem::path& out_dir,
                              CorruptionKind kind, Severity severity);

// file_name with its extension replaced by .png; sub-directories are kept
// so frames from different sequences cannot collide.
std::string CellFileName(const std::string& file_name);

struct CellStats {
  CorruptionKind kind = CorruptionKind::kFog;
  Severity severity{1};
  std::int64_t images = 0;
  std::int64_t failures = 0;
  double mean_psnr = 0.0;  // over successful images
};

struct ImageFailure {
  std::int64_t image_id = 0;
  std::string file_name;
  std::string cell;  // "<kind>/<severity>", or "*" for all cells
  std::string message;
};

struct CellVisibility {
  CorruptionKind kind = CorruptionKind::kFog;
  Severity severity{1};
  VisibilityReport report;
};

struct GridReport {
  std::vector<CellStats> cells;  // plan order: kinds outer, severities inner
  std::vector<CellVisibility> visibility_failures;
  std::vector<ImageFailure> failures;
  std::int64_t files_written = 0;
  std::int64_t files_unchanged = 0;
  double elapsed_seconds = 0.0;

  bool has_failures() const { return !failures.empty(); }
};

// Materializes every (kind, severity, image) cell as PNG under
// plan.out_dir. Per-image problems are recorded and never abort the run; a
// manifest that fails to parse throws. Existing outputs whose bytes already
// match are left untouched. Also writes grid_report.json into out_dir.
GridReport RunGrid(const GridPlan& plan);

std::string SerializeGridReport(const GridReport& report);

struct VisibilityAudit {
  std::vector<CellVisibility> checked;  // every box in every cell
  std::vector<ImageFailure> failures;
  std::int64_t skipped_degenerate = 0;

  std::int64_t failed_checks() const;
};

// Runs the visibility guard for all boxes x cells without writing images.
VisibilityAudit RunVisibilityAudit(const GridPlan& plan);

std::string SerializeVisibilityAudit(const VisibilityAudit& audit,
                                     double threshold);

}  // namespace skyblight

#endif  // SKYBLIGHT_PIPELINE_GRID_H_
