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
#include <numbers>

#include "skyblight/core/color.h"
#include "skyblight/core/random.h"
#include "skyblight/corruption/corruptions.h"
#include "skyblight/corruption/plasma.h"

namespace skyblight {

Rgb8Image FogCorrupt(const Rgb8Image& image, const FogParams& params,
                     std::uint64_t seed) {
  const PlasmaField plasma =
      PlasmaFractal(image.width(), image.height(), params.decay, seed);
  std::vector<float> linear = ToLinear(image);
  const double depth = kFogDensity * params.intensity;
  for (std::size_t i = 0; i < plasma.values.size(); ++i) {
    const double t = std::clamp(1.0 - depth * plasma.values[i], 0.0, 1.0);
    const double haze = kFogAirlight * (1.0 - t);
    for (int c = 0; c < 3; ++c) {
      float& v = linear[i * 3 + c];
      v = static_cast<float>(v * t + haze);
    }
  }
  return FromLinear(linear, image.width(), image.height());
}

std::int64_t RainStreakCount(std::uint32_t width, std::uint32_t height,
                             double density) {
  return std::llround(density * static_cast<double>(width) * height / 1e6);
}

RainLayout PlanRainStreaks(std::uint32_t width, std::uint32_t height,
                           const RainParams& params, std::uint64_t seed) {
  RandomStream rng(seed);
  RainLayout layout;
  layout.angle_deg = rng.Uniform(-kRainMaxAngleDeg, kRainMaxAngleDeg);
  const std::int64_t count = RainStreakCount(width, height, params.density);
  layout.streaks.reserve(static_cast<std::size_t>(std::max<std::int64_t>(0, count)));
  for (std::int64_t i = 0; i < count; ++i) {
    RainStreak streak;
    streak.x0 = rng.Uniform(0.0, width);
    streak.y0 = rng.Uniform(0.0, height);
    streak.length = params.length * rng.Uniform(0.8, 1.2);
    layout.streaks.push_back(streak);
  }
  return layout;
}

namespace {

// Coverage of 1-px-wide streaks, split between the two nearest columns at
// every row centre the segment crosses.
std::vector<float> RasterizeStreaks(const RainLayout& layout,
                                    std::uint32_t width,
                                    std::uint32_t height) {
  std::vector<float> coverage(static_cast<std::size_t>(width) * height, 0.0f);
  const double theta = layout.angle_deg * std::numbers::pi / 180.0;
  const double slope = std::tan(theta);  // dx per unit dy
  const double dy_per_len = std::cos(theta);
  auto deposit = [&](long col, long row, double amount) {
    if (col < 0 || row < 0 || col >= static_cast<long>(width) ||
        row >= static_cast<long>(height)) {
      return;
    }
    float& cell = coverage[static_cast<std::size_t>(row) * width + col];
    cell = std::max(cell, static_cast<float>(amount));
  };
  for (const RainStreak& s : layout.streaks) {
    const double y_end = s.y0 + s.length * dy_per_len;
    const long row_begin = std::lround(std::ceil(s.y0 - 0.5));
    const long row_end = std::lround(std::floor(y_end - 0.5));
    for (long row = row_begin; row <= row_end; ++row) {
      const double yc = row + 0.5;
      const double xc = s.x0 + (yc - s.y0) * slope;
      const double u = xc - 0.5;
      const double left = std::floor(u);
      const double frac = u - left;
      const long col = static_cast<long>(left);
      deposit(col, row, 1.0 - frac);
      deposit(col + 1, row, frac);
    }
  }
  return coverage;
}

double SampleBilinear(const std::vector<float>& plane, std::uint32_t width,
                      std::uint32_t height, double x, double y) {
  // Pixel centres sit at integer + 0.5; outside the frame reads as zero.
  const double u = x - 0.5;
  const double v = y - 0.5;
  const double fu = std::floor(u);
  const double fv = std::floor(v);
  const long x0 = static_cast<long>(fu);
  const long y0 = static_cast<long>(fv);
  const double wx = u - fu;
  const double wy = v - fv;
  auto get = [&](long px, long py) -> double {
    if (px < 0 || py < 0 || px >= static_cast<long>(width) ||
        py >= static_cast<long>(height)) {
      return 0.0;
    }
    return plane[static_cast<std::size_t>(py) * width + px];
  };
  return (get(x0, y0) * (1 - wx) + get(x0 + 1, y0) * wx) * (1 - wy) +
         (get(x0, y0 + 1) * (1 - wx) + get(x0 + 1, y0 + 1) * wx) * wy;
}

// 3-tap [1/4, 1/2, 1/4] blur along the streak direction.
std::vector<float> BlurAlongAngle(const std::vector<float>& coverage,
                                  std::uint32_t width, std::uint32_t height,
                                  double angle_deg) {
  const double theta = angle_deg * std::numbers::pi / 180.0;
  const double dx = std::sin(theta);
  const double dy = std::cos(theta);
  std::vector<float> out(coverage.size(), 0.0f);
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x) {
      const double cx = x + 0.5;
      const double cy = y + 0.5;
      const double value =
          0.25 * SampleBilinear(coverage, width, height, cx - dx, cy - dy) +
          0.5 * coverage[static_cast<std::size_t>(y) * width + x] +
          0.25 * SampleBilinear(coverage, width, height, cx + dx, cy + dy);
      out[static_cast<std::size_t>(y) * width + x] =
          static_cast<float>(std::min(1.0, value));
    }
  }
  return out;
}

}  // namespace

Rgb8Image RainCorrupt(const Rgb8Image& image, const RainParams& params,
                      std::uint64_t seed) {
  const std::uint32_t width = image.width();
  const std::uint32_t height = image.height();
  const RainLayout layout = PlanRainStreaks(width, height, params, seed);
  Rgb8Image out = image;
  auto px = out.mutable_pixels();
  if (!layout.streaks.empty() && params.opacity > 0.0) {
    const std::vector<float> streaks = BlurAlongAngle(
        RasterizeStreaks(layout, width, height), width, height,
        layout.angle_deg);
    for (std::size_t i = 0; i < streaks.size(); ++i) {
      const double weight = params.opacity * streaks[i];
      if (weight <= 0.0) continue;
      for (int c = 0; c < 3; ++c) {
        const double v = DecodeGamma(px[i * 3 + c]);
        const double streak = std::min(1.0, v + kRainStreakValue);
        px[i * 3 + c] = EncodeGamma((1.0 - weight) * v + weight * streak);
      }
    }
  }
  if (params.contrast_scale != 1.0) {
    for (auto& v : px) {
      v = ClampToByte(127.5 + params.contrast_scale * (v - 127.5));
    }
  }
  return out;
}

}  // namespace skyblight
