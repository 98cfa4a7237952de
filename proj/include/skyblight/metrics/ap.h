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

#ifndef SKYBLIGHT_METRICS_AP_H_
#define SKYBLIGHT_METRICS_AP_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "skyblight/core/manifest.h"
#include "skyblight/core/types.h"

namespace skyblight {

inline constexpr double kDefaultIouThreshold = 0.5;

// Boxes with non-positive extent give 0.
double Iou(const BoxXywh& a, const BoxXywh& b);

// Maps source category ids to merged target names. An empty merge is the
// identity: every category is scored on its own.
class CategoryMerge {
 public:
  CategoryMerge() = default;

  // Every category of the manifest goes into `target`.
  static CategoryMerge All(std::string target, const DatasetManifest& gt);

  // Accepts "NAME" (merge everything) or "NAME=1,2,3". Throws
  // kInvalidArgument on bad syntax or unknown ids.
  static CategoryMerge Parse(std::string_view text, const DatasetManifest& gt);

  void Add(std::int64_t source_id, std::string target);
  // Combines two merges; a source id present in both with different
  // targets throws kInvalidArgument.
  void Extend(const CategoryMerge& other);

  bool identity() const { return targets_.empty(); }
  const std::map<std::int64_t, std::string>& targets() const {
    return targets_;
  }

  // Throws kInvalidArgument unless every manifest category is mapped (a
  // non-identity merge must be total on the categories it is applied to).
  void CheckTotal(const DatasetManifest& gt) const;

  // Merged label of a category: the target name, or "id:<n>" for the
  // identity merge.
  std::string Label(std::int64_t category_id) const;

 private:
  std::map<std::int64_t, std::string> targets_;
};

struct PrPoint {
  double recall = 0.0;
  double precision = 0.0;
};

// Cumulative precision/recall after each detection in ranked order.
std::vector<PrPoint> PrCurve(const std::vector<bool>& true_positive_ranked,
                             std::int64_t num_gt);

// Area under the monotone precision envelope over all recall points.
double AllPointAp(const std::vector<PrPoint>& curve);

struct ApResult {
  // AP per merged label that has at least one ground-truth box.
  std::map<std::string, double> per_label;
  // Mean over per_label; 0 when there is no ground truth.
  double ap = 0.0;
};

// Detections whose category is unmapped by a non-identity merge or absent
// from the manifest are ignored. Throws kUnknownImageId for detections on
// images missing from the manifest, kInvalidArgument for iou_thr outside
// (0, 1) or a non-total merge.
ApResult EvaluateAp(const DatasetManifest& gt,
                    const std::vector<DetectionRecord>& detections,
                    double iou_thr = kDefaultIouThreshold,
                    const CategoryMerge& merge = {});

}  // namespace skyblight

#endif  // SKYBLIGHT_METRICS_AP_H_
