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

#ifndef SKYBLIGHT_CORRUPTION_VISIBILITY_H_
#define SKYBLIGHT_CORRUPTION_VISIBILITY_H_

#include <cstdint>

#include "skyblight/core/image.h"
#include "skyblight/core/types.h"

namespace skyblight {

inline constexpr double kDefaultVisibilityThreshold = 0.30;

struct VisibilityReport {
  std::int64_t image_id = 0;
  std::int64_t box_id = 0;
  double contrast_retention = 1.0;
  bool pass = true;
};

// Integer pixel rectangle covered by a box, clipped to the image.
struct PixelRect {
  std::uint32_t x0 = 0;
  std::uint32_t y0 = 0;
  std::uint32_t x1 = 0;  // exclusive
  std::uint32_t y1 = 0;  // exclusive

  bool empty() const { return x1 <= x0 || y1 <= y0; }
};

PixelRect BoxPixels(const BoxXywh& box, std::uint32_t width,
                    std::uint32_t height);

// Standard deviation of linear luminance over the rectangle.
double RmsContrast(const Rgb8Image& image, const PixelRect& rect);

// Retention = RMS contrast of the corrupted crop / that of the clean crop,
// defined as 1 when the clean crop is flat. Throws kDegenerateBox for boxes
// under 4 px^2 and kInvalidArgument on mismatched image sizes.
VisibilityReport VisibilityCheck(const Rgb8Image& clean,
                                 const Rgb8Image& corrupted, const GtBox& box,
                                 double threshold = kDefaultVisibilityThreshold);

}  // namespace skyblight

#endif  // SKYBLIGHT_CORRUPTION_VISIBILITY_H_
