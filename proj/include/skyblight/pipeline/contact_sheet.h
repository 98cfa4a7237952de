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

#ifndef SKYBLIGHT_PIPELINE_CONTACT_SHEET_H_
#define SKYBLIGHT_PIPELINE_CONTACT_SHEET_H_

#include <cstdint>
#include <filesystem>

#include "skyblight/core/image.h"
#include "skyblight/core/manifest.h"
#include "skyblight/corruption/schedule.h"

namespace skyblight {

inline constexpr std::uint32_t kSheetGapPx = 2;
inline constexpr std::uint8_t kSheetGapValue = 255;

struct SheetCellOrigin {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
};

// Top-left corner of the cell for (kind row, severity column).
SheetCellOrigin ContactSheetCell(int row, int column, std::uint32_t cell_size);

// Seven rows (kinds, canonical order) by four columns (severities 1..4),
// each cell the corrupted frame resized to cell_size x cell_size, with 2 px
// white separators. Output is (4c + 10) x (7c + 16).
Rgb8Image RenderContactSheet(const Rgb8Image& clean, std::int64_t image_id,
                             std::uint64_t global_seed,
                             std::uint32_t cell_size,
                             const ParamSchedule& schedule);

// Loads the frame from the dataset; throws kUnknownImageId when the id is
// not in the manifest.
Rgb8Image RenderContactSheet(std::int64_t image_id,
                             const DatasetManifest& manifest,
                             const std::filesystem::path& images_root,
                             std::uint64_t global_seed,
                             std::uint32_t cell_size,
                             const ParamSchedule& schedule);

}  // namespace skyblight

#endif  // SKYBLIGHT_PIPELINE_CONTACT_SHEET_H_
