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

#include "skyblight/core/color.h"

#include <algorithm>
#include <array>
#include <cmath>

namespace skyblight {
namespace {

struct GammaTables {
  std::array<double, 256> decode;
  // upper[b] is the linear value at which the encoder switches from byte b
  // to byte b + 1, i.e. ((b + 0.5) / 255)^2.2.
  std::array<double, 255> upper;

  GammaTables() {
    for (int b = 0; b < 256; ++b) {
      decode[b] = std::pow(b / 255.0, kDisplayGamma);
    }
    for (int b = 0; b < 255; ++b) {
      upper[b] = std::pow((b + 0.5) / 255.0, kDisplayGamma);
    }
  }
};

const GammaTables& Tables() {
  static const GammaTables tables;
  return tables;
}

}  // namespace

double DecodeGamma(std::uint8_t value) { return Tables().decode[value]; }

std::uint8_t EncodeGamma(double linear) {
  const auto& upper = Tables().upper;
  // First threshold strictly greater than the value: round-half-up.
  const auto it = std::upper_bound(upper.begin(), upper.end(), linear);
  return static_cast<std::uint8_t>(it - upper.begin());
}

std::vector<float> ToLinear(const Rgb8Image& image) {
  const auto px = image.pixels();
  std::vector<float> out(px.size());
  const auto& decode = Tables().decode;
  for (std::size_t i = 0; i < px.size(); ++i) {
    out[i] = static_cast<float>(decode[px[i]]);
  }
  return out;
}

Rgb8Image FromLinear(std::span<const float> linear, std::uint32_t width,
                     std::uint32_t height) {
  Rgb8Image out(width, height);
  auto px = out.mutable_pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    px[i] = EncodeGamma(linear[i]);
  }
  return out;
}

double LinearLuminance(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const auto& decode = Tables().decode;
  return kLumaR * decode[r] + kLumaG * decode[g] + kLumaB * decode[b];
}

double MeanLinearLuminance(const Rgb8Image& image) {
  const auto px = image.pixels();
  double sum = 0.0;
  for (std::size_t i = 0; i < px.size(); i += 3) {
    sum += LinearLuminance(px[i], px[i + 1], px[i + 2]);
  }
  return sum / static_cast<double>(image.pixel_count());
}

std::uint8_t ClampToByte(double value) {
  if (!(value > 0.0)) return 0;
  if (value >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::lround(value));
}

}  // namespace skyblight
