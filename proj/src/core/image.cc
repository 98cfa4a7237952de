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

#include "skyblight/core/image.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "skyblight/core/color.h"
#include "skyblight/core/error.h"

namespace skyblight {

Rgb8Image::Rgb8Image(std::uint32_t width, std::uint32_t height)
    : Rgb8Image(width, height,
                std::vector<std::uint8_t>(
                    static_cast<std::size_t>(width) * height * 3, 0)) {}

Rgb8Image::Rgb8Image(std::uint32_t width, std::uint32_t height,
                     std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "image dimensions must be >= 1");
  }
  if (pixels_.size() != static_cast<std::size_t>(width_) * height_ * 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "pixel buffer holds " + std::to_string(pixels_.size()) +
                    " bytes, expected " +
                    std::to_string(static_cast<std::size_t>(width_) *
                                   height_ * 3));
  }
}

Rgb8Image Crop(const Rgb8Image& image, std::uint32_t x, std::uint32_t y,
               std::uint32_t width, std::uint32_t height) {
  if (static_cast<std::uint64_t>(x) + width > image.width() ||
      static_cast<std::uint64_t>(y) + height > image.height()) {
    throw Error(ErrorCode::kInvalidArgument, "crop rectangle outside image");
  }
  Rgb8Image out(width, height);
  const auto src = image.pixels();
  auto dst = out.mutable_pixels();
  for (std::uint32_t row = 0; row < height; ++row) {
    const std::size_t src_off =
        (static_cast<std::size_t>(y + row) * image.width() + x) * 3;
    std::copy_n(src.begin() + src_off, static_cast<std::size_t>(width) * 3,
                dst.begin() + static_cast<std::size_t>(row) * width * 3);
  }
  return out;
}

Rgb8Image ResizeBilinear(const Rgb8Image& image, std::uint32_t width,
                         std::uint32_t height) {
  Rgb8Image out(width, height);
  const double sx = static_cast<double>(image.width()) / width;
  const double sy = static_cast<double>(image.height()) / height;
  const int max_x = static_cast<int>(image.width()) - 1;
  const int max_y = static_cast<int>(image.height()) - 1;
  for (std::uint32_t y = 0; y < height; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, 1.0 * max_y);
    const int y0 = static_cast<int>(std::floor(fy));
    const int y1 = std::min(y0 + 1, max_y);
    const double wy = fy - y0;
    for (std::uint32_t x = 0; x < width; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, 1.0 * max_x);
      const int x0 = static_cast<int>(std::floor(fx));
      const int x1 = std::min(x0 + 1, max_x);
      const double wx = fx - x0;
      for (int c = 0; c < 3; ++c) {
        const double top = image.at(x0, y0, c) * (1.0 - wx) +
                           image.at(x1, y0, c) * wx;
        const double bottom = image.at(x0, y1, c) * (1.0 - wx) +
                              image.at(x1, y1, c) * wx;
        out.at(x, y, c) = ClampToByte(top * (1.0 - wy) + bottom * wy);
      }
    }
  }
  return out;
}

}  // namespace skyblight
