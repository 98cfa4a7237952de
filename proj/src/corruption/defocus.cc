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

#include <algorithm>
#include <cmath>

#include "skyblight/core/color.h"
#include "skyblight/corruption/corruptions.h"

namespace skyblight {

DiskKernel MakeDiskKernel(double radius) {
  DiskKernel kernel;
  kernel.half = static_cast<int>(std::ceil(radius + 0.5));
  const int size = kernel.size();
  kernel.weights.assign(static_cast<std::size_t>(size) * size, 0.0);
  double sum = 0.0;
  for (int dy = -kernel.half; dy <= kernel.half; ++dy) {
    for (int dx = -kernel.half; dx <= kernel.half; ++dx) {
      const double distance = std::hypot(static_cast<double>(dx),
                                         static_cast<double>(dy));
      const double w = std::clamp(radius + 0.5 - distance, 0.0, 1.0);
      kernel.weights[static_cast<std::size_t>(dy + kernel.half) * size + dx +
                     kernel.half] = w;
      sum += w;
    }
  }
  for (double& w : kernel.weights) w /= sum;
  return kernel;
}

Rgb8Image DefocusCorrupt(const Rgb8Image& image, const DefocusParams& params) {
  const DiskKernel kernel = MakeDiskKernel(params.radius);
  const int half = kernel.half;
  const int width = static_cast<int>(image.width());
  const int height = static_cast<int>(image.height());
  const int padded_w = width + 2 * half;

  // Clamp-to-edge padded copy, interleaved RGB.
  std::vector<double> padded(static_cast<std::size_t>(padded_w) *
                             (height + 2 * half) * 3);
  for (int y = -half; y < height + half; ++y) {
    const int sy = std::clamp(y, 0, height - 1);
    for (int x = -half; x < width + half; ++x) {
      const int sx = std::clamp(x, 0, width - 1);
      const std::size_t dst =
          (static_cast<std::size_t>(y + half) * padded_w + x + half) * 3;
      for (int c = 0; c < 3; ++c) padded[dst + c] = image.at(sx, sy, c);
    }
  }

  struct Tap {
    int dx;
    int dy;
    double w;
  };
  std::vector<Tap> taps;
  for (int dy = -half; dy <= half; ++dy) {
    for (int dx = -half; dx <= half; ++dx) {
      const double w = kernel.at(dx, dy);
      if (w > 0.0) taps.push_back({dx, dy, w});
    }
  }

  std::vector<double> acc(static_cast<std::size_t>(width) * 3);
  Rgb8Image out(image.width(), image.height());
  auto dst = out.mutable_pixels();
  for (int y = 0; y < height; ++y) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (const Tap& tap : taps) {
      const double* row =
          padded.data() +
          (static_cast<std::size_t>(y + half + tap.dy) * padded_w + half +
           tap.dx) *
              3;
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += tap.w * row[i];
    }
    for (std::size_t i = 0; i < acc.size(); ++i) {
      dst[static_cast<std::size_t>(y) * width * 3 + i] = ClampToByte(acc[i]);
    }
  }
  return out;
}

}  // namespace skyblight
