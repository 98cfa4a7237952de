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

#include "skyblight/pipeline/contact_sheet.h"

#include <algorithm>
#include <string>

#include "skyblight/core/error.h"
#include "skyblight/core/image_io.h"
#include "skyblight/core/seed.h"
#include "skyblight/corruption/corruptions.h"

namespace skyblight {

SheetCellOrigin ContactSheetCell(int row, int column,
                                 std::uint32_t cell_size) {
  const std::uint32_t pitch = cell_size + kSheetGapPx;
  return {kSheetGapPx + static_cast<std::uint32_t>(column) * pitch,
          kSheetGapPx + static_cast<std::uint32_t>(row) * pitch};
}

Rgb8Image RenderContactSheet(const Rgb8Image& clean, std::int64_t image_id,
                             std::uint64_t global_seed,
                             std::uint32_t cell_size,
                             const ParamSchedule& schedule) {
  if (cell_size < 1 || cell_size > 4096) {
    throw Error(ErrorCode::kInvalidArgument,
                "cell size must lie in [1, 4096], got " +
                    std::to_string(cell_size));
  }
  const auto cols = static_cast<std::uint32_t>(kNumSeverities);
  const auto rows = static_cast<std::uint32_t>(kNumCorruptionKinds);
  const std::uint32_t width = cols * cell_size + (cols + 1) * kSheetGapPx;
  const std::uint32_t height = rows * cell_size + (rows + 1) * kSheetGapPx;
  Rgb8Image sheet(width, height);
  auto canvas = sheet.mutable_pixels();
  std::fill(canvas.begin(), canvas.end(), kSheetGapValue);

  for (int r = 0; r < kNumCorruptionKinds; ++r) {
    const CorruptionKind kind = kAllKinds[r];
    for (int c = 0; c < kNumSeverities; ++c) {
      const Severity sev = kAllSeverities[c];
      const std::uint64_t seed =
          DeriveSeed(SeedContext{global_seed, image_id, kind, sev});
      const Rgb8Image tile = ResizeBilinear(
          ApplyCorruption(clean, schedule.Resolve(kind, sev), seed), cell_size,
          cell_size);
      const SheetCellOrigin origin = ContactSheetCell(r, c, cell_size);
      const auto src = tile.pixels();
      for (std::uint32_t y = 0; y < cell_size; ++y) {
        std::copy_n(src.begin() + std::size_t{y} * cell_size * 3,
                    std::size_t{cell_size} * 3,
                    canvas.begin() +
                        (std::size_t{origin.y + y} * width + origin.x) * 3);
      }
    }
  }
  return sheet;
}

Rgb8Image RenderContactSheet(std::int64_t image_id,
                             const DatasetManifest& manifest,
                             const std::filesystem::path& images_root,
                             std::uint64_t global_seed,
                             std::uint32_t cell_size,
                             const ParamSchedule& schedule) {
  const ImageEntry* entry = manifest.FindImage(image_id);
  if (entry == nullptr) {
    throw Error(ErrorCode::kUnknownImageId,
                "image id " + std::to_string(image_id) +
                    " is not in the manifest");
  }
  return RenderContactSheet(LoadImage(images_root / entry->file_name),
                            image_id, global_seed, cell_size, schedule);
}

}  // namespace skyblight
