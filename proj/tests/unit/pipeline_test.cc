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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "skyblight/core/error.h"
#include "skyblight/core/image_io.h"
#include "skyblight/core/manifest.h"
#include "skyblight/core/seed.h"
#include "skyblight/corruption/corruptions.h"
#include "skyblight/pipeline/contact_sheet.h"
#include "skyblight/pipeline/grid.h"
#include "skyblight/pipeline/worker_pool.h"
#include "support/fixtures.h"

namespace skyblight {
namespace {

namespace fs = std::filesystem;
using testing::FixtureSet;
using testing::MakeFixtureSet;
using testing::TempDir;
using testing::TreeHash;
using testing::WriteFixtureSet;

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected skyblight::Error";
  return ErrorCode::kInvalidArgument;
}

class GridTest : public ::testing::Test {
 protected:
  GridTest() : dir_("grid"), set_(MakeFixtureSet(4, 72, 56, 11)) {
    plan_.manifest_path = WriteFixtureSet(set_, dir_.path() / "data");
    plan_.images_root = dir_.path() / "data";
    plan_.out_dir = dir_.path() / "out";
    plan_.global_seed = 77;
  }

  TempDir dir_;
  FixtureSet set_;
  GridPlan plan_;
};

TEST_F(GridTest, WritesEveryCellWithEngineOutput) {
  const GridReport report = RunGrid(plan_);
  EXPECT_FALSE(report.has_failures());
  ASSERT_EQ(report.cells.size(), 28u);
  EXPECT_EQ(report.files_written, 28 * 5);
  EXPECT_TRUE(fs::is_regular_file(plan_.out_dir / kGridReportFile));

  for (const CellStats& c : report.cells) {
    EXPECT_EQ(c.images, 4);
    EXPECT_EQ(c.failures, 0);
    EXPECT_GT(c.mean_psnr, 0.0);
    const fs::path cell = CellDir(plan_.out_dir, c.kind, c.severity);
    const DatasetManifest m = ParseManifest(cell / kCellManifestFile);
    EXPECT_EQ(m.annotations, set_.manifest.annotations);
    ASSERT_EQ(m.images.size(), 4u);
    for (std::size_t i = 0; i < m.images.size(); ++i) {
      EXPECT_EQ(m.images[i].file_name, set_.manifest.images[i].file_name);
      const Rgb8Image got = LoadImage(cell / m.images[i].file_name);
      const CorruptionSpec spec = plan_.schedule.Resolve(c.kind, c.severity);
      const std::uint64_t seed =
          DeriveSeed(SeedContext{77, m.images[i].id, c.kind, c.severity});
      EXPECT_EQ(got, ApplyCorruption(set_.images[i], spec, seed));
    }
  }
  EXPECT_EQ(fs::path(CellDir(plan_.out_dir, CorruptionKind::kIsoNoise, Severity(3)))
                .lexically_relative(plan_.out_dir)
                .generic_string(),
            "iso_noise/3");
}

TEST_F(GridTest, RestartLeavesCompletedFilesAlone) {
  RunGrid(plan_);
  const fs::path probe = CellDir(plan_.out_dir, CorruptionKind::kFog, Severity(2)) /
                         set_.manifest.images[0].file_name;
  const auto stamp = fs::last_write_time(probe);
  const std::string before = TreeHash(plan_.out_dir, {kGridReportFile});
  const GridReport again = RunGrid(plan_);
  EXPECT_EQ(again.files_written, 0);
  EXPECT_EQ(again.files_unchanged, 28 * 5);
  EXPECT_EQ(fs::last_write_time(probe), stamp);
  EXPECT_EQ(TreeHash(plan_.out_dir, {kGridReportFile}), before);

  // A damaged output is repaired on the next run.
  testing::WriteBytes(probe, "junk");
  const GridReport repaired = RunGrid(plan_);
  EXPECT_EQ(repaired.files_written, 1);
  EXPECT_EQ(TreeHash(plan_.out_dir, {kGridReportFile}), before);
}

TEST_F(GridTest, WorkerCountDoesNotChangeBytes) {
  plan_.workers = 1;
  RunGrid(plan_);
  const std::string serial = TreeHash(plan_.out_dir, {kGridReportFile});
  plan_.out_dir = dir_.path() / "out4";
  plan_.workers = 4;
  RunGrid(plan_);
  EXPECT_EQ(TreeHash(plan_.out_dir, {kGridReportFile}), serial);
}

TEST_F(GridTest, DifferentSeedsDifferOnStochasticCells) {
  plan_.kinds = {CorruptionKind::kIsoNoise, CorruptionKind::kColorQuant};
  plan_.severities = {Severity(2)};
  RunGrid(plan_);
  const GridPlan first = plan_;
  plan_.out_dir = dir_.path() / "other";
  plan_.global_seed = 78;
  RunGrid(plan_);
  const std::string f = set_.manifest.images[0].file_name;
  EXPECT_NE(testing::ReadBytes(CellDir(first.out_dir, CorruptionKind::kIsoNoise,
                                       Severity(2)) / f),
            testing::ReadBytes(CellDir(plan_.out_dir, CorruptionKind::kIsoNoise,
                                       Severity(2)) / f));
  EXPECT_EQ(testing::ReadBytes(CellDir(first.out_dir, CorruptionKind::kColorQuant,
                                       Severity(2)) / f),
            testing::ReadBytes(CellDir(plan_.out_dir, CorruptionKind::kColorQuant,
                                       Severity(2)) / f));
}

TEST_F(GridTest, UnreadableImageIsRecordedAndOthersComplete) {
  testing::WriteBytes(plan_.images_root / set_.manifest.images[1].file_name,
                      "\x89PNG truncated");
  fs::remove(plan_.images_root / set_.manifest.images[2].file_name);
  plan_.kinds = {CorruptionKind::kFog, CorruptionKind::kNearFocus};
  const GridReport report = RunGrid(plan_);
  ASSERT_EQ(report.failures.size(), 2u);
  std::set<std::int64_t> failed;
  for (const ImageFailure& f : report.failures) {
    EXPECT_EQ(f.cell, "*");
    EXPECT_FALSE(f.message.empty());
    failed.insert(f.image_id);
  }
  EXPECT_EQ(failed, (std::set<std::int64_t>{101, 102}));
  for (const CellStats& c : report.cells) {
    EXPECT_EQ(c.images, 2);
    EXPECT_EQ(c.failures, 2);
    const fs::path cell = CellDir(plan_.out_dir, c.kind, c.severity);
    EXPECT_TRUE(fs::exists(cell / set_.manifest.images[0].file_name));
    EXPECT_TRUE(fs::exists(cell / set_.manifest.images[3].file_name));
    EXPECT_FALSE(fs::exists(cell / set_.manifest.images[1].file_name));
    const DatasetManifest m = ParseManifest(cell / kCellManifestFile);
    ASSERT_EQ(m.images.size(), 2u);
    for (const GtBox& b : m.annotations) {
      EXPECT_TRUE(b.image_id == 100 || b.image_id == 103);
    }
  }
}

TEST_F(GridTest, SizeMismatchIsAnImageFailure) {
  SaveImage(testing::UniformImage(10, 10, 128),
            plan_.images_root / set_.manifest.images[0].file_name);
  plan_.kinds = {CorruptionKind::kFog};
  plan_.severities = {Severity(1)};
  const GridReport report = RunGrid(plan_);
  ASSERT_EQ(report.failures.size(), 1u);
  EXPECT_EQ(report.failures[0].image_id, 100);
}

TEST_F(GridTest, MalformedManifestAborts) {
  testing::WriteBytes(plan_.manifest_path, "{\"images\": 3}");
  EXPECT_EQ(CodeOf([&] { RunGrid(plan_); }), ErrorCode::kMalformedManifest);
}

TEST_F(GridTest, OutputNameCollisionIsRejected) {
  DatasetManifest m = set_.manifest;
  m.images.push_back({900, "frames/frame_0.jpg", 72, 56});
  WriteManifest(m, plan_.manifest_path);
  EXPECT_EQ(CodeOf([&] { RunGrid(plan_); }), ErrorCode::kMalformedManifest);
}

TEST_F(GridTest, PlanValidation) {
  GridPlan p = plan_;
  p.kinds.clear();
  EXPECT_EQ(CodeOf([&] { ValidatePlan(p); }), ErrorCode::kInvalidArgument);
  p = plan_;
  p.kinds = {CorruptionKind::kFog, CorruptionKind::kFog};
  EXPECT_EQ(CodeOf([&] { ValidatePlan(p); }), ErrorCode::kInvalidArgument);
  p = plan_;
  p.severities = {Severity(2), Severity(2)};
  EXPECT_EQ(CodeOf([&] { ValidatePlan(p); }), ErrorCode::kInvalidArgument);
  p = plan_;
  p.workers = 0;
  EXPECT_EQ(CodeOf([&] { ValidatePlan(p); }), ErrorCode::kInvalidArgument);
  p = plan_;
  p.visibility_threshold = 1.5;
  EXPECT_EQ(CodeOf([&] { ValidatePlan(p); }), ErrorCode::kInvalidArgument);
  p = plan_;
  p.out_dir = plan_.images_root / ".";
  EXPECT_EQ(CodeOf([&] { ValidatePlan(p); }), ErrorCode::kInvalidArgument);
  ValidatePlan(p, /*writes_outputs=*/false);
  p = plan_;
  p.out_dir.clear();
  EXPECT_EQ(CodeOf([&] { ValidatePlan(p); }), ErrorCode::kInvalidArgument);
  ValidatePlan(plan_);
}

TEST_F(GridTest, VisibilityAuditCoversEveryBox) {
  const VisibilityAudit audit = RunVisibilityAudit(plan_);
  EXPECT_TRUE(audit.failures.empty());
  EXPECT_EQ(audit.checked.size() + audit.skipped_degenerate,
            28 * set_.manifest.annotations.size());
  EXPECT_FALSE(fs::exists(plan_.out_dir));
  const std::string text = SerializeVisibilityAudit(audit, 0.3);
  EXPECT_NE(text.find("\"threshold\""), std::string::npos);
}

TEST(CellFileNameTest, ReplacesExtensionKeepsDirectories) {
  EXPECT_EQ(CellFileName("a.jpg"), "a.png");
  EXPECT_EQ(CellFileName("seq1/f.0001.jpeg"), "seq1/f.0001.png");
  EXPECT_EQ(CellFileName("noext"), "noext.png");
}

TEST(ParallelForTest, VisitsEveryIndexOnceAndRethrows) {
  for (int workers : {1, 3, 8}) {
    std::vector<int> hits(100, 0);
    ParallelFor(hits.size(), workers, [&](std::size_t i) { ++hits[i]; });
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_THROW(ParallelFor(10, workers,
                             [](std::size_t i) {
                               if (i == 4) throw std::runtime_error("x");
                             }),
                 std::runtime_error);
  }
}

TEST(ContactSheetTest, LayoutAndTiles) {
  const Rgb8Image clean = testing::RandomImage(40, 30, 5);
  const ParamSchedule schedule = ParamSchedule::Default();
  const std::uint32_t c = 16;
  const Rgb8Image sheet = RenderContactSheet(clean, 9, 123, c, schedule);
  EXPECT_EQ(sheet.width(), 4 * c + 10);
  EXPECT_EQ(sheet.height(), 7 * c + 16);
  for (std::uint32_t y = 0; y < sheet.height(); ++y) {
    EXPECT_EQ(sheet.at(0, y, 0), kSheetGapValue);
    EXPECT_EQ(sheet.at(c + 2, y, 1), kSheetGapValue);
  }
  for (std::uint32_t x = 0; x < sheet.width(); ++x) {
    EXPECT_EQ(sheet.at(x, 1, 2), kSheetGapValue);
  }
  for (int row = 0; row < 7; ++row) {
    for (int col = 0; col < 4; ++col) {
      const CorruptionKind kind = kAllKinds[row];
      const Severity sev(col + 1);
      const Rgb8Image want = ResizeBilinear(
          ApplyCorruption(clean, schedule.Resolve(kind, sev),
                          DeriveSeed(SeedContext{123, 9, kind, sev})),
          c, c);
      const SheetCellOrigin o = ContactSheetCell(row, col, c);
      EXPECT_EQ(Crop(sheet, o.x, o.y, c, c), want) << row << "," << col;
    }
  }
  EXPECT_EQ(CodeOf([&] { RenderContactSheet(clean, 9, 1, 0, schedule); }),
            ErrorCode::kInvalidArgument);
}

TEST(ContactSheetTest, DatasetOverload) {
  TempDir dir("sheet");
  const FixtureSet set = MakeFixtureSet(2, 48, 40, 3);
  WriteFixtureSet(set, dir.path());
  const ParamSchedule s = ParamSchedule::Default();
  EXPECT_EQ(RenderContactSheet(101, set.manifest, dir.path(), 5, 8, s),
            RenderContactSheet(set.images[1], 101, 5, 8, s));
  EXPECT_EQ(CodeOf([&] { RenderContactSheet(55, set.manifest, dir.path(), 5, 8, s); }),
            ErrorCode::kUnknownImageId);
}

}  // namespace
}  // namespace skyblight
