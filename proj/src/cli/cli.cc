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

#include "skyblight/cli/cli.h"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skyblight/augment/augment.h"
#include "skyblight/core/detections.h"
#include "skyblight/core/error.h"
#include "skyblight/core/image_io.h"
#include "skyblight/core/manifest.h"
#include "skyblight/metrics/ap.h"
#include "skyblight/metrics/eval_table.h"
#include "skyblight/metrics/report.h"
#include "skyblight/pipeline/contact_sheet.h"
#include "skyblight/pipeline/grid.h"
#include "skyblight/pipeline/worker_pool.h"

namespace skyblight {
namespace {

namespace fs = std::filesystem;

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<CorruptionKind> ParseKinds(const std::string& text) {
  if (text.empty() || text == "all") return {kAllKinds.begin(), kAllKinds.end()};
  std::vector<CorruptionKind> kinds;
  for (const std::string& name : SplitList(text)) {
    kinds.push_back(KindFromName(name));
  }
  if (kinds.empty()) throw Error(ErrorCode::kInvalidArgument, "empty --kinds");
  return kinds;
}

std::vector<Severity> ParseSeverities(const std::string& text) {
  if (text.empty() || text == "all") {
    return {kAllSeverities.begin(), kAllSeverities.end()};
  }
  std::vector<Severity> levels;
  for (const std::string& item : SplitList(text)) {
    int level = 0;
    try {
      std::size_t used = 0;
      level = std::stoi(item, &used);
      if (used != item.size()) level = 0;
    } catch (const std::exception&) {
      level = 0;
    }
    levels.push_back(Severity(level));
  }
  if (levels.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty --severities");
  }
  return levels;
}

ParamSchedule LoadSchedule(const std::string& path) {
  return path.empty() ? ParamSchedule::Default() : ParamSchedule::FromFile(path);
}

std::string ReadText(const fs::path& path) {
  const std::vector<std::uint8_t> bytes = ReadFileBytes(path);
  return std::string(bytes.begin(), bytes.end());
}

void WriteText(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  WriteFileBytes(path, std::span<const std::uint8_t>(
                           reinterpret_cast<const std::uint8_t*>(text.data()),
                           text.size()));
}

struct GlobalOptions {
  std::optional<int> workers;
  bool quiet = false;

  int ResolvedWorkers() const {
    return workers ? *workers : DefaultWorkerCount();
  }
};

struct GridOptions {
  std::string manifest;
  std::string images_root;
  std::string kinds;
  std::string severities;
  std::string schedule;
  std::uint64_t seed = 0;
  double threshold = kDefaultVisibilityThreshold;

  GridPlan ToPlan(const GlobalOptions& g, const std::string& out) const {
    GridPlan plan;
    plan.manifest_path = manifest;
    plan.images_root =
        images_root.empty() ? fs::path(manifest).parent_path() : fs::path(images_root);
    plan.kinds = ParseKinds(kinds);
    plan.severities = ParseSeverities(severities);
    plan.out_dir = out;
    plan.global_seed = seed;
    plan.workers = g.ResolvedWorkers();
    plan.schedule = LoadSchedule(schedule);
    plan.visibility_threshold = threshold;
    return plan;
  }
};

void AddGridFlags(CLI::App* cmd, GridOptions& o) {
  cmd->add_option("--manifest", o.manifest, "Dataset manifest JSON")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--images-root", o.images_root,
                  "Directory the manifest file names are relative to "
                  "(default: the manifest's directory)");
  cmd->add_option("--seed", o.seed, "Global seed (required)")->required();
  cmd->add_option("--kinds", o.kinds,
                  "Comma-separated corruption kinds, or 'all' (default)");
  cmd->add_option("--severities", o.severities,
                  "Comma-separated levels 1..4, or 'all' (default)");
  cmd->add_option("--schedule", o.schedule,
                  "JSON file overriding severity parameter rows")
      ->check(CLI::ExistingFile);
}

int CmdCorrupt(const GlobalOptions& g, const GridOptions& o,
               const std::string& out_dir, std::ostream& out) {
  const GridReport report = RunGrid(o.ToPlan(g, out_dir));
  if (!g.quiet) {
    out << std::left << std::setw(12) << "corruption" << std::setw(10)
        << "severity" << std::setw(8) << "images" << std::setw(10)
        << "failures" << "mean_psnr_db\n";
    for (const CellStats& c : report.cells) {
      out << std::setw(12) << KindName(c.kind) << std::setw(10)
          << c.severity.level() << std::setw(8) << c.images << std::setw(10)
          << c.failures << std::fixed << std::setprecision(2) << c.mean_psnr
          << "\n";
    }
    out << "written " << report.files_written << ", unchanged "
        << report.files_unchanged << ", visibility failures "
        << report.visibility_failures.size() << ", elapsed " << std::fixed
        << std::setprecision(2) << report.elapsed_seconds << " s\n";
  }
  for (const ImageFailure& f : report.failures) {
    out << "failed: image " << f.image_id << " (" << f.file_name << ") cell "
        << f.cell << ": " << f.message << "\n";
  }
  return report.has_failures() ? kExitPartialFailure : kExitOk;
}

int CmdValidate(const GlobalOptions& g, const GridOptions& o,
                const std::string& out_dir, std::ostream& out) {
  const VisibilityAudit audit = RunVisibilityAudit(o.ToPlan(g, out_dir));
  WriteText(fs::path(out_dir) / kVisibilityReportFile,
            SerializeVisibilityAudit(audit, o.threshold));
  const std::int64_t failed = audit.failed_checks();
  if (!g.quiet) {
    out << "checked " << audit.checked.size() << " box x cell pairs, failed "
        << failed << ", skipped degenerate " << audit.skipped_degenerate
        << "\n";
  }
  for (const CellVisibility& v : audit.checked) {
    if (v.report.pass) continue;
    out << "not visible: image " << v.report.image_id << " box "
        << v.report.box_id << " in " << KindName(v.kind) << "/"
        << v.severity.level() << " retention " << std::fixed
        << std::setprecision(3) << v.report.contrast_retention << "\n";
  }
  for (const ImageFailure& f : audit.failures) {
    out << "failed: image " << f.image_id << " (" << f.file_name << "): "
        << f.message << "\n";
  }
  return failed > 0 || !audit.failures.empty() ? kExitPartialFailure : kExitOk;
}

struct ScoreOptions {
  std::string gt;
  std::vector<std::string> dets_dirs;
  std::vector<std::string> models;
  std::vector<std::string> clean_dets;
  std::vector<std::string> merges;
  std::string kinds;
  double iou_thr = kDefaultIouThreshold;
  std::string out = ".";
};

int CmdScore(const GlobalOptions& g, const ScoreOptions& o, std::ostream& out) {
  if (!o.models.empty() && o.models.size() != o.dets_dirs.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "--model must be given once per --dets-dir");
  }
  if (o.clean_dets.size() > o.dets_dirs.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "more --clean-dets than --dets-dir entries");
  }
  const DatasetManifest gt = ParseManifest(o.gt);
  CategoryMerge merge;
  for (const std::string& m : o.merges) merge.Extend(CategoryMerge::Parse(m, gt));
  const std::vector<CorruptionKind> kinds = ParseKinds(o.kinds);

  std::vector<EvalTable> tables;
  for (std::size_t i = 0; i < o.dets_dirs.size(); ++i) {
    const fs::path dir = o.dets_dirs[i];
    EvalTable table(o.models.empty() ? dir.filename().string() : o.models[i]);
    for (CorruptionKind kind : kinds) {
      for (Severity sev : kAllSeverities) {
        const fs::path file = dir / std::string(KindName(kind)) /
                              std::to_string(sev.level()) / "detections.json";
        if (!fs::is_regular_file(file)) {
          throw Error(ErrorCode::kIncompleteTable,
                      "missing detection file " + file.string());
        }
        table.Set(kind, sev,
                  EvaluateAp(gt, ParseDetections(file), o.iou_thr, merge).ap);
      }
    }
    fs::path clean = i < o.clean_dets.size() ? fs::path(o.clean_dets[i])
                                             : dir / "clean" / "detections.json";
    if (i < o.clean_dets.size() || fs::is_regular_file(clean)) {
      table.set_ap_clean(
          EvaluateAp(gt, ParseDetections(clean), o.iou_thr, merge).ap);
    }
    tables.push_back(std::move(table));
  }
  WriteReports(tables, o.out);
  if (!g.quiet) {
    for (const EvalTable& t : tables) {
      out << t.model() << ": AP_clean "
          << (t.ap_clean() ? FormatPercent(*t.ap_clean()) : "-") << ", AP_cor "
          << FormatPercent(ApCor(t)) << "\n";
    }
    out << "reports written to " << o.out << "\n";
  }
  return kExitOk;
}

struct PreviewOptions {
  std::string manifest;
  std::string images_root;
  std::int64_t image_id = 0;
  std::uint64_t seed = 0;
  std::uint32_t cell_size = 128;
  std::string schedule;
  std::string out;
};

int CmdPreview(const GlobalOptions& g, const PreviewOptions& o,
               std::ostream& out) {
  const DatasetManifest manifest = ParseManifest(o.manifest);
  const fs::path root = o.images_root.empty()
                            ? fs::path(o.manifest).parent_path()
                            : fs::path(o.images_root);
  const Rgb8Image sheet = RenderContactSheet(
      o.image_id, manifest, root, o.seed, o.cell_size, LoadSchedule(o.schedule));
  if (fs::path(o.out).has_parent_path()) {
    std::error_code ec;
    fs::create_directories(fs::path(o.out).parent_path(), ec);
  }
  SaveImage(sheet, o.out);
  if (!g.quiet) {
    out << "contact sheet " << sheet.width() << "x" << sheet.height()
        << " written to " << o.out << "\n";
  }
  return kExitOk;
}

struct PlanOptions {
  std::string manifest;
  std::uint64_t epoch_seed = 0;
  std::string policy_file;
  std::optional<double> p_clean;
  std::string kind_weights;
  std::string severity_weights;
  std::string schedule;
  std::string out;
};

AugmentPolicy BuildPolicy(const PlanOptions& o) {
  AugmentPolicy policy = o.policy_file.empty()
                             ? AugmentPolicy{}
                             : AugmentPolicy::FromJsonText(ReadText(o.policy_file));
  if (o.p_clean) policy.p_clean = *o.p_clean;
  if (!o.kind_weights.empty()) {
    policy.kind_weights.fill(0.0);
    for (const std::string& item : SplitList(o.kind_weights)) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos) {
        throw Error(ErrorCode::kInvalidArgument,
                    "--kind-weights entries look like fog=1.5, got " + item);
      }
      try {
        policy.kind_weights[KindIndex(KindFromName(item.substr(0, eq)))] =
            std::stod(item.substr(eq + 1));
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::kInvalidArgument, "bad weight in " + item);
      }
    }
  }
  if (!o.severity_weights.empty()) {
    const std::vector<std::string> parts = SplitList(o.severity_weights);
    if (parts.size() != kNumSeverities) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--severity-weights needs 4 comma-separated values");
    }
    for (int i = 0; i < kNumSeverities; ++i) {
      try {
        policy.severity_weights[i] = std::stod(parts[i]);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::kInvalidArgument, "bad weight " + parts[i]);
      }
    }
  }
  policy.Validate();
  return policy;
}

int CmdAugmentPlan(const GlobalOptions& g, const PlanOptions& o,
                   std::ostream& out) {
  const DatasetManifest manifest = ParseManifest(o.manifest);
  std::vector<std::int64_t> ids;
  ids.reserve(manifest.images.size());
  for (const ImageEntry& e : manifest.images) ids.push_back(e.id);
  const AugmentPlan plan =
      SamplePlan(ids, BuildPolicy(o), o.epoch_seed, LoadSchedule(o.schedule));
  WriteText(o.out, SerializePlan(plan));
  if (!g.quiet) {
    const auto clean = std::count_if(
        plan.decisions.begin(), plan.decisions.end(),
        [](const AugmentDecision& d) { return d.clean(); });
    out << "plan for " << plan.decisions.size() << " images (" << clean
        << " clean) written to " << o.out << "\n";
  }
  return kExitOk;
}

int ExitCodeFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kMalformedManifest:
    case ErrorCode::kDanglingReference:
    case ErrorCode::kUnsupportedFormat:
    case ErrorCode::kIoFailure:
    case ErrorCode::kDegenerateBox:
    case ErrorCode::kUnknownImageId:
    case ErrorCode::kIncompleteTable:
    case ErrorCode::kInvalidSchedule:
      return kExitInputError;
  }
  return kExitInternalError;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Corruption synthesis and robustness scoring for air-to-air "
               "detection datasets",
               "skyblight");
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions global;
  app.add_option("--workers", global.workers,
                 "Worker threads (default: SKYBLIGHT_WORKERS, then core count)")
      ->check(CLI::PositiveNumber);
  app.add_flag("-q,--quiet", global.quiet, "Only print failures");

  GridOptions corrupt_opts;
  std::string corrupt_out;
  CLI::App* corrupt =
      app.add_subcommand("corrupt", "Materialize the kind x severity grid");
  AddGridFlags(corrupt, corrupt_opts);
  corrupt->add_option("--out", corrupt_out, "Output directory")->required();
  corrupt->add_option("--visibility-threshold", corrupt_opts.threshold,
                      "Contrast retention below which a box is reported")
      ->check(CLI::Range(0.0, 1.0));

  GridOptions validate_opts;
  std::string validate_out = ".";
  CLI::App* validate = app.add_subcommand(
      "validate", "Check that annotated objects stay visible in every cell");
  AddGridFlags(validate, validate_opts);
  validate->add_option("--out", validate_out,
                       "Directory for visibility_report.json (default: .)");
  validate->add_option("--threshold", validate_opts.threshold,
                       "Minimum contrast retention (default 0.30)")
      ->check(CLI::Range(0.0, 1.0));

  ScoreOptions score_opts;
  CLI::App* score = app.add_subcommand(
      "score", "Score per-cell detections and write AP reports");
  score->add_option("--gt", score_opts.gt, "Ground-truth manifest JSON")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("--dets-dir", score_opts.dets_dirs,
                    "Per-model directory holding <kind>/<severity>/"
                    "detections.json (repeatable)")
      ->required();
  score->add_option("--model", score_opts.models,
                    "Model name per --dets-dir, same order (repeatable)");
  score->add_option("--clean-dets", score_opts.clean_dets,
                    "Clean detections per --dets-dir, same order (repeatable; "
                    "default <dets-dir>/clean/detections.json if present)");
  score->add_option("--merge", score_opts.merges,
                    "Category merge: NAME (all categories) or NAME=1,2,3 "
                    "(repeatable)");
  score->add_option("--kinds", score_opts.kinds,
                    "Comma-separated kinds to score, or 'all' (default)");
  score->add_option("--iou-thr", score_opts.iou_thr,
                    "IoU threshold for a match (default 0.5)")
      ->check(CLI::Range(0.0, 1.0));
  score->add_option("--out", score_opts.out,
                    "Directory for report.csv, report.md, eval_table.json");

  PreviewOptions preview_opts;
  CLI::App* preview = app.add_subcommand(
      "preview", "Render the 7 x 4 contact sheet for one image");
  preview->add_option("--manifest", preview_opts.manifest, "Dataset manifest")
      ->required()
      ->check(CLI::ExistingFile);
  preview->add_option("--images-root", preview_opts.images_root,
                      "Directory the manifest file names are relative to");
  preview->add_option("--image-id", preview_opts.image_id, "Image id")
      ->required();
  preview->add_option("--seed", preview_opts.seed, "Global seed (required)")
      ->required();
  preview->add_option("--cell-size", preview_opts.cell_size,
                      "Square cell edge in pixels (default 128)")
      ->check(CLI::Range(1, 4096));
  preview->add_option("--schedule", preview_opts.schedule,
                      "JSON file overriding severity parameter rows")
      ->check(CLI::ExistingFile);
  preview->add_option("--out", preview_opts.out, "Output PNG")->required();

  PlanOptions plan_opts;
  CLI::App* plan = app.add_subcommand(
      "augment-plan", "Sample a per-image corruption plan for finetuning");
  plan->add_option("--manifest", plan_opts.manifest,
                   "Manifest whose image ids are planned")
      ->required()
      ->check(CLI::ExistingFile);
  plan->add_option("--epoch-seed", plan_opts.epoch_seed,
                   "Seed for this epoch (required)")
      ->required();
  plan->add_option("--policy", plan_opts.policy_file,
                   "Policy JSON {p_clean, kind_weights, severity_weights}")
      ->check(CLI::ExistingFile);
  plan->add_option("--p-clean", plan_opts.p_clean,
                   "Probability of keeping an image clean (default 0.5)");
  plan->add_option("--kind-weights", plan_opts.kind_weights,
                   "Weights as fog=1,rain=2,...; unnamed kinds get 0");
  plan->add_option("--severity-weights", plan_opts.severity_weights,
                   "Four comma-separated weights for levels 1..4");
  plan->add_option("--schedule", plan_opts.schedule,
                   "JSON file overriding severity parameter rows")
      ->check(CLI::ExistingFile);
  plan->add_option("--out", plan_opts.out, "Output plan JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    const auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitInputError;
  }

  try {
    if (*corrupt) return CmdCorrupt(global, corrupt_opts, corrupt_out, out);
    if (*validate) return CmdValidate(global, validate_opts, validate_out, out);
    if (*score) return CmdScore(global, score_opts, out);
    if (*preview) return CmdPreview(global, preview_opts, out);
    if (*plan) return CmdAugmentPlan(global, plan_opts, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInternalError;
}

}  // namespace skyblight
