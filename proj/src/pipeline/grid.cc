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

#include "skyblight/pipeline/grid.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <system_error>
#include <utility>

#include "json.hpp"
#include "skyblight/core/error.h"
#include "skyblight/core/image_io.h"
#include "skyblight/core/seed.h"
#include "skyblight/corruption/corruptions.h"
#include "skyblight/metrics/image_quality.h"
#include "skyblight/pipeline/worker_pool.h"

namespace skyblight {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Cell {
  CorruptionKind kind;
  Severity severity;
  std::string label;  // "<kind>/<level>"
};

std::vector<Cell> PlanCells(const GridPlan& plan) {
  std::vector<Cell> cells;
  for (CorruptionKind kind : plan.kinds) {
    for (Severity sev : plan.severities) {
      cells.push_back({kind, sev,
                       std::string(KindName(kind)) + "/" +
                           std::to_string(sev.level())});
    }
  }
  return cells;
}

struct ImageOutcome {
  std::vector<std::optional<double>> psnr;  // per cell, set on success
  std::vector<CellVisibility> visibility;
  std::vector<ImageFailure> failures;
  std::int64_t skipped_degenerate = 0;
  std::int64_t written = 0;
  std::int64_t unchanged = 0;
};

// Returns true when the file was (re)written.
bool WriteIfChanged(const fs::path& path,
                    const std::vector<std::uint8_t>& bytes) {
  std::error_code ec;
  if (fs::is_regular_file(path, ec) && fs::file_size(path, ec) == bytes.size()) {
    try {
      if (ReadFileBytes(path) == bytes) return false;
    } catch (const Error&) {
    }
  }
  fs::path tmp = path;
  tmp += ".partial";
  WriteFileBytes(tmp, bytes);
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::kIoFailure,
                "cannot move output into place: " + path.string());
  }
  return true;
}

bool WriteIfChanged(const fs::path& path, const std::string& text) {
  return WriteIfChanged(path, std::vector<std::uint8_t>(text.begin(), text.end()));
}

struct GridContext {
  const GridPlan& plan;
  DatasetManifest manifest;
  std::vector<Cell> cells;
  std::map<std::int64_t, std::vector<GtBox>> boxes_by_image;
};

GridContext LoadContext(const GridPlan& plan, bool writes_outputs) {
  ValidatePlan(plan, writes_outputs);
  GridContext ctx{plan, ParseManifest(plan.manifest_path), PlanCells(plan), {}};
  for (const GtBox& box : ctx.manifest.annotations) {
    ctx.boxes_by_image[box.image_id].push_back(box);
  }
  std::set<std::string> names;
  for (const ImageEntry& entry : ctx.manifest.images) {
    if (!names.insert(CellFileName(entry.file_name)).second) {
      throw Error(ErrorCode::kMalformedManifest,
                  "two images map to the same output file " +
                      CellFileName(entry.file_name));
    }
  }
  return ctx;
}

void RecordVisibility(const GridContext& ctx, const Cell& cell,
                      const Rgb8Image& clean, const Rgb8Image& corrupted,
                      std::int64_t image_id, bool failures_only,
                      ImageOutcome& out) {
  const auto it = ctx.boxes_by_image.find(image_id);
  if (it == ctx.boxes_by_image.end()) return;
  for (const GtBox& box : it->second) {
    try {
      VisibilityReport report = VisibilityCheck(clean, corrupted, box,
                                                ctx.plan.visibility_threshold);
      if (!failures_only || !report.pass) {
        out.visibility.push_back({cell.kind, cell.severity, report});
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegenerateBox) throw;
      ++out.skipped_degenerate;
    }
  }
}

ImageOutcome ProcessImage(const GridContext& ctx, const ImageEntry& entry,
                          bool write_outputs) {
  ImageOutcome out;
  out.psnr.resize(ctx.cells.size());
  std::optional<Rgb8Image> clean;
  try {
    clean = LoadImage(ctx.plan.images_root / entry.file_name);
    if (clean->width() != entry.width || clean->height() != entry.height) {
      throw Error(ErrorCode::kIoFailure,
                  "decoded size " + std::to_string(clean->width()) + "x" +
                      std::to_string(clean->height()) +
                      " differs from manifest " + std::to_string(entry.width) +
                      "x" + std::to_string(entry.height));
    }
  } catch (const Error& e) {
    out.failures.push_back({entry.id, entry.file_name, "*", e.what()});
    return out;
  }
  const std::string out_name = CellFileName(entry.file_name);
  for (std::size_t c = 0; c < ctx.cells.size(); ++c) {
    const Cell& cell = ctx.cells[c];
    try {
      const CorruptionSpec spec =
          ctx.plan.schedule.Resolve(cell.kind, cell.severity);
      const std::uint64_t seed = DeriveSeed(SeedContext{
          ctx.plan.global_seed, entry.id, cell.kind, cell.severity});
      const Rgb8Image corrupted = ApplyCorruption(*clean, spec, seed);
      if (write_outputs) {
        const fs::path path =
            CellDir(ctx.plan.out_dir, cell.kind, cell.severity) / out_name;
        if (WriteIfChanged(path, EncodePng(corrupted))) {
          ++out.written;
        } else {
          ++out.unchanged;
        }
      }
      RecordVisibility(ctx, cell, *clean, corrupted, entry.id, write_outputs,
                       out);
      out.psnr[c] = Psnr(*clean, corrupted);
    } catch (const Error& e) {
      out.failures.push_back({entry.id, entry.file_name, cell.label, e.what()});
    } catch (const std::exception& e) {
      out.failures.push_back({entry.id, entry.file_name, cell.label, e.what()});
    }
  }
  return out;
}

std::vector<ImageOutcome> ProcessAll(const GridContext& ctx,
                                     bool write_outputs) {
  std::vector<ImageOutcome> outcomes(ctx.manifest.images.size());
  ParallelFor(outcomes.size(), ctx.plan.workers, [&](std::size_t i) {
    outcomes[i] = ProcessImage(ctx, ctx.manifest.images[i], write_outputs);
  });
  return outcomes;
}

void CreateOutputDirs(const GridContext& ctx) {
  std::set<fs::path> dirs;
  for (const Cell& cell : ctx.cells) {
    const fs::path base = CellDir(ctx.plan.out_dir, cell.kind, cell.severity);
    dirs.insert(base);
    for (const ImageEntry& entry : ctx.manifest.images) {
      dirs.insert((base / CellFileName(entry.file_name)).parent_path());
    }
  }
  for (const fs::path& dir : dirs) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
      throw Error(ErrorCode::kIoFailure,
                  "cannot create directory " + dir.string() + ": " +
                      ec.message());
    }
  }
}

Json FailureJson(const ImageFailure& f) {
  return Json{{"image_id", f.image_id},
              {"file_name", f.file_name},
              {"cell", f.cell},
              {"message", f.message}};
}

Json VisibilityJson(const CellVisibility& v) {
  return Json{{"corruption", KindName(v.kind)},
              {"severity", v.severity.level()},
              {"image_id", v.report.image_id},
              {"box_id", v.report.box_id},
              {"contrast_retention", v.report.contrast_retention},
              {"pass", v.report.pass}};
}

}  // namespace

void ValidatePlan(const GridPlan& plan, bool writes_outputs) {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kInvalidArgument, msg);
  };
  if (plan.kinds.empty()) fail("no corruption kinds selected");
  if (plan.severities.empty()) fail("no severities selected");
  if (std::set<CorruptionKind>(plan.kinds.begin(), plan.kinds.end()).size() !=
      plan.kinds.size()) {
    fail("duplicate corruption kind in plan");
  }
  if (std::set<Severity>(plan.severities.begin(), plan.severities.end())
          .size() != plan.severities.size()) {
    fail("duplicate severity in plan");
  }
  if (plan.workers < 1) fail("workers must be at least 1");
  if (plan.manifest_path.empty()) fail("manifest path is empty");
  if (!(plan.visibility_threshold >= 0.0 && plan.visibility_threshold <= 1.0)) {
    fail("visibility threshold must lie in [0, 1]");
  }
  plan.schedule.Validate();
  if (!writes_outputs) return;
  if (plan.out_dir.empty()) fail("output directory is empty");
  std::error_code ec;
  const fs::path out = fs::weakly_canonical(fs::absolute(plan.out_dir), ec);
  const fs::path root = fs::weakly_canonical(
      fs::absolute(plan.images_root.empty() ? fs::path(".") : plan.images_root),
      ec);
  if (out == root) fail("output directory must differ from the dataset root");
}

fs::path CellDir(const fs::path& out_dir, CorruptionKind kind,
                 Severity severity) {
  return out_dir / std::string(KindName(kind)) /
         std::to_string(severity.level());
}

std::string CellFileName(const std::string& file_name) {
  fs::path p(file_name);
  p.replace_extension(".png");
  return p.generic_string();
}

GridReport RunGrid(const GridPlan& plan) {
  const auto start = std::chrono::steady_clock::now();
  const GridContext ctx = LoadContext(plan, true);
  CreateOutputDirs(ctx);
  const std::vector<ImageOutcome> outcomes = ProcessAll(ctx, true);

  GridReport report;
  for (std::size_t c = 0; c < ctx.cells.size(); ++c) {
    CellStats stats{ctx.cells[c].kind, ctx.cells[c].severity, 0, 0, 0.0};
    DatasetManifest cell_manifest;
    cell_manifest.categories = ctx.manifest.categories;
    std::set<std::int64_t> kept;
    double psnr_sum = 0.0;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& psnr = outcomes[i].psnr;
      if (c < psnr.size() && psnr[c]) {
        ++stats.images;
        psnr_sum += *psnr[c];
        ImageEntry entry = ctx.manifest.images[i];
        entry.file_name = CellFileName(entry.file_name);
        cell_manifest.images.push_back(entry);
        kept.insert(entry.id);
      } else {
        ++stats.failures;
      }
    }
    for (const GtBox& box : ctx.manifest.annotations) {
      if (kept.count(box.image_id)) cell_manifest.annotations.push_back(box);
    }
    stats.mean_psnr = stats.images ? psnr_sum / stats.images : 0.0;
    report.cells.push_back(stats);
    const fs::path manifest_path =
        CellDir(plan.out_dir, stats.kind, stats.severity) / kCellManifestFile;
    if (WriteIfChanged(manifest_path, SerializeManifest(cell_manifest))) {
      ++report.files_written;
    } else {
      ++report.files_unchanged;
    }
  }
  for (const ImageOutcome& o : outcomes) {
    report.visibility_failures.insert(report.visibility_failures.end(),
                                      o.visibility.begin(), o.visibility.end());
    report.failures.insert(report.failures.end(), o.failures.begin(),
                           o.failures.end());
    report.files_written += o.written;
    report.files_unchanged += o.unchanged;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  WriteFileBytes(plan.out_dir / kGridReportFile,
                 [&] {
                   const std::string text = SerializeGridReport(report);
                   return std::vector<std::uint8_t>(text.begin(), text.end());
                 }());
  return report;
}

std::string SerializeGridReport(const GridReport& report) {
  Json cells = Json::array();
  for (const CellStats& c : report.cells) {
    cells.push_back({{"corruption", KindName(c.kind)},
                     {"severity", c.severity.level()},
                     {"images", c.images},
                     {"failures", c.failures},
                     {"mean_psnr_db", c.mean_psnr}});
  }
  Json vis = Json::array();
  for (const CellVisibility& v : report.visibility_failures) {
    vis.push_back(VisibilityJson(v));
  }
  Json failures = Json::array();
  for (const ImageFailure& f : report.failures) failures.push_back(FailureJson(f));
  Json root{{"cells", cells},
            {"visibility_failures", vis},
            {"failures", failures},
            {"files_written", report.files_written},
            {"files_unchanged", report.files_unchanged},
            {"elapsed_seconds", report.elapsed_seconds}};
  return root.dump(2) + "\n";
}

std::int64_t VisibilityAudit::failed_checks() const {
  return std::count_if(checked.begin(), checked.end(),
                       [](const CellVisibility& v) { return !v.report.pass; });
}

VisibilityAudit RunVisibilityAudit(const GridPlan& plan) {
  const GridContext ctx = LoadContext(plan, false);
  std::vector<ImageOutcome> outcomes = ProcessAll(ctx, false);
  VisibilityAudit audit;
  for (ImageOutcome& o : outcomes) {
    audit.checked.insert(audit.checked.end(), o.visibility.begin(),
                         o.visibility.end());
    audit.failures.insert(audit.failures.end(), o.failures.begin(),
                          o.failures.end());
    audit.skipped_degenerate += o.skipped_degenerate;
  }
  return audit;
}

std::string SerializeVisibilityAudit(const VisibilityAudit& audit,
                                     double threshold) {
  Json checks = Json::array();
  for (const CellVisibility& v : audit.checked) checks.push_back(VisibilityJson(v));
  Json failures = Json::array();
  for (const ImageFailure& f : audit.failures) failures.push_back(FailureJson(f));
  Json root{{"threshold", threshold},
            {"checked", static_cast<std::int64_t>(audit.checked.size())},
            {"failed", audit.failed_checks()},
            {"skipped_degenerate", audit.skipped_degenerate},
            {"checks", checks},
            {"image_failures", failures}};
  return root.dump(2) + "\n";
}

}  // namespace skyblight
