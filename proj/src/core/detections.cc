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

#include "skyblight/core/detections.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skyblight/core/error.h"

namespace skyblight {

using nlohmann::json;

std::vector<DetectionRecord> ParseDetectionsText(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("detections: invalid JSON: ") + e.what());
  }
  if (!root.is_array()) {
    throw Error(ErrorCode::kInvalidArgument,
                "detections: top level must be a list");
  }
  std::vector<DetectionRecord> dets;
  dets.reserve(root.size());
  try {
    for (const json& item : root) {
      DetectionRecord det;
      det.image_id = item.at("image_id").get<std::int64_t>();
      det.category_id = item.at("category_id").get<std::int64_t>();
      const json& bbox = item.at("bbox");
      if (!bbox.is_array() || bbox.size() != 4) {
        throw Error(ErrorCode::kInvalidArgument,
                    "detections: bbox must be [x, y, w, h]");
      }
      det.bbox = {bbox[0].get<double>(), bbox[1].get<double>(),
                  bbox[2].get<double>(), bbox[3].get<double>()};
      det.score = item.at("score").get<double>();
      if (!(det.score >= 0.0 && det.score <= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "detections: score outside [0, 1]");
      }
      if (!(det.bbox.w > 0.0) || !(det.bbox.h > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "detections: non-positive box extent");
      }
      dets.push_back(det);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("detections: schema error: ") + e.what());
  }
  return dets;
}

std::vector<DetectionRecord> ParseDetections(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure,
                "cannot open detections " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return ParseDetectionsText(text.str());
}

std::string SerializeDetections(const std::vector<DetectionRecord>& dets) {
  json root = json::array();
  for (const auto& det : dets) {
    root.push_back({{"image_id", det.image_id},
                    {"category_id", det.category_id},
                    {"bbox", {det.bbox.x, det.bbox.y, det.bbox.w, det.bbox.h}},
                    {"score", det.score}});
  }
  return root.dump();
}

}  // namespace skyblight
