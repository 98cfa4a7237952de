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

#include "skyblight/metrics/ap.h"

#include <algorithm>
#include <charconv>
#include <tuple>
#include <unordered_map>
#include <utility>

#include "skyblight/core/error.h"

namespace skyblight {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t ParseId(std::string_view text) {
  text = Trim(text);
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad category id '" + std::string(text) + "' in merge");
  }
  return value;
}

bool RankBefore(const DetectionRecord& a, const DetectionRecord& b) {
  if (a.score != b.score) return a.score > b.score;
  return std::tie(a.image_id, a.bbox.x, a.bbox.y, a.bbox.w, a.bbox.h) <
         std::tie(b.image_id, b.bbox.x, b.bbox.y, b.bbox.w, b.bbox.h);
}

}  // namespace

double Iou(const BoxXywh& a, const BoxXywh& b) {
  if (a.w <= 0 || a.h <= 0 || b.w <= 0 || b.h <= 0) return 0.0;
  const double ix = std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x);
  const double iy = std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y);
  if (ix <= 0 || iy <= 0) return 0.0;
  const double inter = ix * iy;
  return inter / (a.w * a.h + b.w * b.h - inter);
}

CategoryMerge CategoryMerge::All(std::string target,
                                 const DatasetManifest& gt) {
  CategoryMerge merge;
  for (const Category& c : gt.categories) merge.Add(c.id, target);
  return merge;
}

CategoryMerge CategoryMerge::Parse(std::string_view text,
                                   const DatasetManifest& gt) {
  const std::size_t eq = text.find('=');
  const std::string name(Trim(text.substr(0, eq)));
  if (name.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "merge target name is empty");
  }
  if (eq == std::string_view::npos) return All(name, gt);
  CategoryMerge merge;
  std::string_view rest = text.substr(eq + 1);
  while (true) {
    const std::size_t comma = rest.find(',');
    const std::int64_t id = ParseId(rest.substr(0, comma));
    if (gt.FindCategory(id) == nullptr) {
      throw Error(ErrorCode::kInvalidArgument,
                  "merge names unknown category id " + std::to_string(id));
    }
    merge.Add(id, name);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return merge;
}

void CategoryMerge::Add(std::int64_t source_id, std::string target) {
  const auto [it, inserted] = targets_.emplace(source_id, target);
  if (!inserted && it->second != target) {
    throw Error(ErrorCode::kInvalidArgument,
                "category " + std::to_string(source_id) +
                    " merged into both '" + it->second + "' and '" + target +
                    "'");
  }
}

void CategoryMerge::Extend(const CategoryMerge& other) {
  for (const auto& [id, target] : other.targets_) Add(id, target);
}

void CategoryMerge::CheckTotal(const DatasetManifest& gt) const {
  if (identity()) return;
  for (const Category& c : gt.categories) {
    if (!targets_.count(c.id)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "category " + std::to_string(c.id) + " (" + c.name +
                      ") is not covered by the merge");
    }
  }
}

std::string CategoryMerge::Label(std::int64_t category_id) const {
  if (identity()) return "id:" + std::to_string(category_id);
  const auto it = targets_.find(category_id);
  return it == targets_.end() ? std::string() : it->second;
}

std::vector<PrPoint> PrCurve(const std::vector<bool>& true_positive_ranked,
                             std::int64_t num_gt) {
  std::vector<PrPoint> curve;
  curve.reserve(true_positive_ranked.size());
  std::int64_t tp = 0;
  for (std::size_t i = 0; i < true_positive_ranked.size(); ++i) {
    if (true_positive_ranked[i]) ++tp;
    curve.push_back({num_gt > 0 ? static_cast<double>(tp) / num_gt : 0.0,
                     static_cast<double>(tp) / static_cast<double>(i + 1)});
  }
  return curve;
}

double AllPointAp(const std::vector<PrPoint>& curve) {
  double ap = 0.0;
  double envelope = 0.0;
  // Walk from the tail so the running max is the envelope at each point.
  for (std::size_t i = curve.size(); i-- > 0;) {
    envelope = std::max(envelope, curve[i].precision);
    const double prev_recall = i > 0 ? curve[i - 1].recall : 0.0;
    ap += (curve[i].recall - prev_recall) * envelope;
  }
  return ap;
}

ApResult EvaluateAp(const DatasetManifest& gt,
                    const std::vector<DetectionRecord>& detections,
                    double iou_thr, const CategoryMerge& merge) {
  if (!(iou_thr > 0.0 && iou_thr < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "IoU threshold must lie in (0, 1)");
  }
  merge.CheckTotal(gt);

  std::unordered_map<std::int64_t, std::string> label_of;
  for (const Category& c : gt.categories) label_of[c.id] = merge.Label(c.id);

  // (label, image) -> GT boxes sorted by annotation id.
  std::map<std::pair<std::string, std::int64_t>, std::vector<const GtBox*>>
      gt_index;
  std::map<std::string, std::int64_t> gt_count;
  for (const GtBox& box : gt.annotations) {
    const std::string& label = label_of.at(box.category_id);
    gt_index[{label, box.image_id}].push_back(&box);
    ++gt_count[label];
  }
  for (auto& [key, boxes] : gt_index) {
    std::sort(boxes.begin(), boxes.end(),
              [](const GtBox* a, const GtBox* b) { return a->id < b->id; });
  }

  std::map<std::string, std::vector<const DetectionRecord*>> dets_by_label;
  for (const DetectionRecord& d : detections) {
    if (gt.FindImage(d.image_id) == nullptr) {
      throw Error(ErrorCode::kUnknownImageId,
                  "detection references image id " +
                      std::to_string(d.image_id) + " not in the manifest");
    }
    const auto it = label_of.find(d.category_id);
    if (it == label_of.end() || it->second.empty()) continue;
    dets_by_label[it->second].push_back(&d);
  }

  ApResult result;
  for (const auto& [label, num_gt] : gt_count) {
    std::vector<const DetectionRecord*> ranked = dets_by_label[label];
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const DetectionRecord* a, const DetectionRecord* b) {
                       return RankBefore(*a, *b);
                     });
    std::map<std::int64_t, std::vector<bool>> used;
    std::vector<bool> tp;
    tp.reserve(ranked.size());
    for (const DetectionRecord* d : ranked) {
      const auto cand = gt_index.find({label, d->image_id});
      bool hit = false;
      if (cand != gt_index.end()) {
        std::vector<bool>& taken = used[d->image_id];
        taken.resize(cand->second.size(), false);
        double best = -1.0;
        std::size_t best_idx = 0;
        for (std::size_t g = 0; g < cand->second.size(); ++g) {
          if (taken[g]) continue;
          const double iou = Iou(d->bbox, cand->second[g]->bbox);
          if (iou >= iou_thr && iou > best) {
            best = iou;
            best_idx = g;
          }
        }
        if (best >= 0.0) {
          taken[best_idx] = true;
          hit = true;
        }
      }
      tp.push_back(hit);
    }
    result.per_label[label] = AllPointAp(PrCurve(tp, num_gt));
  }
  if (!result.per_label.empty()) {
    double sum = 0.0;
    for (const auto& [label, ap] : result.per_label) sum += ap;
    result.ap = sum / static_cast<double>(result.per_label.size());
  }
  return result;
}

}  // namespace skyblight
