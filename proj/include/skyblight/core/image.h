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

#ifndef SKYBLIGHT_CORE_IMAGE_H_
#define SKYBLIGHT_CORE_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace skyblight {

// 8-bit sRGB raster, row-major, interleaved RGB.
class Rgb8Image {
 public:
  // Zero-filled image. Throws kInvalidArgument on a zero dimension.
  Rgb8Image(std::uint32_t width, std::uint32_t height);
  // Throws kInvalidArgument unless pixels.size() == width * height * 3.
  Rgb8Image(std::uint32_t width, std::uint32_t height,
            std::vector<std::uint8_t> pixels);

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width_) * height_;
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> mutable_pixels() noexcept { return pixels_; }

  std::uint8_t at(std::uint32_t x, std::uint32_t y, int channel) const {
    return pixels_[(static_cast<std::size_t>(y) * width_ + x) * 3 + channel];
  }
  std::uint8_t& at(std::uint32_t x, std::uint32_t y, int channel) {
    return pixels_[(static_cast<std::size_t>(y) * width_ + x) * 3 + channel];
  }

  friend bool operator==(const Rgb8Image&, const Rgb8Image&) = default;

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  std::vector<std::uint8_t> pixels_;
};

// Sub-image copy; the rectangle must lie inside the source.
Rgb8Image Crop(const Rgb8Image& image, std::uint32_t x, std::uint32_t y,
               std::uint32_t width, std::uint32_t height);

// Bilinear resample with pixel-centre alignment, clamp-to-edge, rounded.
Rgb8Image ResizeBilinear(const Rgb8Image& image, std::uint32_t width,
                         std::uint32_t height);

}  // namespace skyblight

#endif  // SKYBLIGHT_CORE_IMAGE_H_
