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

#ifndef SKYBLIGHT_CORE_DETECTIONS_H_
#define SKYBLIGHT_CORE_DETECTIONS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "skyblight/core/types.h"

namespace skyblight {

// JSON array of {"image_id", "category_id", "bbox": [x, y, w, h], "score"}.
std::vector<DetectionRecord> ParseDetectionsText(std::string_view json_text);
std::vector<DetectionRecord> ParseDetections(
    const std::filesystem::path& path);

std::string SerializeDetections(const std::vector<DetectionRecord>& dets);

}  // namespace skyblight

#endif  // SKYBLIGHT_CORE_DETECTIONS_H_
