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

#include "skyblight/corruption/visibility.h"

#include <algorithm>
#include <cmath>

#include "skyblight/core/color.h"
#include "skyblight/core/error.h"

namespace skyblight {

PixelRect BoxPixels(const BoxXywh& box, std::uint32_t width,
                    std::uint32_t height) {
  auto clip = [](double v, std::uint32_t limit) -> std::uint32_t {
    return static_cast<std::uint32_t>(
        std::clamp(v, 0.0, static_cast<double>(limit)));
  };
  return PixelRect{clip(std::floor(box.x), width),
                   clip(std::floor(box.y), height),
                   clip(std::ceil(box.x + box.w), width),
                   clip(std::ceil(box.y + box.h), height)};
}

double RmsContrast(const Rgb8Image& image, const PixelRect& rect) {
  if (rect.empty()) return 0.0;
  auto luma = [&](std::uint32_t x, std::uint32_t y) {
    return LinearLuminance(image.at(x, y, 0), image.at(x, y, 1),
                           image.at(x, y, 2));
  };
  // Shifted two-pass variance; a flat crop gives exactly 0.
  const double shift = luma(rect.x0, rect.y0);
  const double count =
      static_cast<double>(rect.x1 - rect.x0) * (rect.y1 - rect.y0);
  double sum = 0.0;
  for (std::uint32_t y = rect.y0; y < rect.y1; ++y) {
    for (std::uint32_t x = rect.x0; x < rect.x1; ++x) sum += luma(x, y) - shift;
  }
  const double mean = sum / count;
  double sq = 0.0;
  for (std::uint32_t y = rect.y0; y < rect.y1; ++y) {
    for (std::uint32_t x = rect.x0; x < rect.x1; ++x) {
      const double d = luma(x, y) - shift - mean;
      sq += d * d;
    }
  }
  return std::sqrt(sq / count);
}

VisibilityReport VisibilityCheck(const Rgb8Image& clean,
                                 const Rgb8Image& corrupted, const GtBox& box,
                                 double threshold) {
  if (clean.width() != corrupted.width() ||
      clean.height() != corrupted.height()) {
    throw Error(ErrorCode::kInvalidArgument,
                "visibility check needs equally sized images");
  }
  if (!(box.bbox.area() >= 4.0)) {
    throw Error(ErrorCode::kDegenerateBox,
                "box " + std::to_string(box.id) + " is smaller than 4 px^2");
  }
  const PixelRect rect = BoxPixels(box.bbox, clean.width(), clean.height());
  if (rect.empty()) {
    throw Error(ErrorCode::kDegenerateBox,
                "box " + std::to_string(box.id) + " lies outside the image");
  }
  VisibilityReport report;
  report.image_id = box.image_id;
  report.box_id = box.id;
  const double before = RmsContrast(clean, rect);
  report.contrast_retention =
      before > 0.0 ? RmsContrast(corrupted, rect) / before : 1.0;
  report.pass = report.contrast_retention >= threshold;
  return report;
}

}  // namespace skyblight
