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

#ifndef SKYBLIGHT_CORRUPTION_CORRUPTIONS_H_
#define SKYBLIGHT_CORRUPTION_CORRUPTIONS_H_

#include <cstdint>
#include <vector>

#include "skyblight/core/image.h"
#include "skyblight/corruption/schedule.h"

namespace skyblight {

// Pure function of (image, spec, seed); output has the input's dimensions.
// Deterministic kinds (color_quant, far/near focus) ignore the seed.
Rgb8Image ApplyCorruption(const Rgb8Image& image, const CorruptionSpec& spec,
                          std::uint64_t seed);

// --- Weather -------------------------------------------------------------

inline constexpr double kFogAirlight = 0.92;  // linear

// Linear-light blend toward airlight with transmittance
// t = clamp(1 - kFogDensity * intensity * P, 0, 1), P a plasma field.
inline constexpr double kFogDensity = 0.2;
Rgb8Image FogCorrupt(const Rgb8Image& image, const FogParams& params,
                     std::uint64_t seed);

inline constexpr double kRainStreakValue = 0.8;  // additive, linear
inline constexpr double kRainMaxAngleDeg = 30.0;

struct RainStreak {
  double x0 = 0.0;
  double y0 = 0.0;
  double length = 0.0;
  friend bool operator==(const RainStreak&, const RainStreak&) = default;
};

struct RainLayout {
  double angle_deg = 0.0;  // from vertical, positive leans right
  std::vector<RainStreak> streaks;
  friend bool operator==(const RainLayout&, const RainLayout&) = default;
};

// round(density * width * height / 1e6), half away from zero.
std::int64_t RainStreakCount(std::uint32_t width, std::uint32_t height,
                             double density);
RainLayout PlanRainStreaks(std::uint32_t width, std::uint32_t height,
                           const RainParams& params, std::uint64_t seed);
Rgb8Image RainCorrupt(const Rgb8Image& image, const RainParams& params,
                      std::uint64_t seed);

// Darkening plus Poisson-Gaussian sensor noise in linear light.
Rgb8Image LowLightCorrupt(const Rgb8Image& image, const LowLightParams& params,
                          std::uint64_t seed);

// --- Sensor noise --------------------------------------------------------

// LowLightCorrupt with scale = 1.
Rgb8Image IsoNoiseCorrupt(const Rgb8Image& image, const IsoNoiseParams& params,
                          std::uint64_t seed);

std::uint8_t QuantizeChannel(std::uint8_t value, int bits);
Rgb8Image ColorQuantCorrupt(const Rgb8Image& image,
                            const ColorQuantParams& params);

// --- Defocus -------------------------------------------------------------

struct DiskKernel {
  int half = 0;  // kernel is (2 * half + 1)^2
  std::vector<double> weights;  // row-major, sums to 1

  int size() const { return 2 * half + 1; }
  double at(int dx, int dy) const {
    return weights[static_cast<std::size_t>(dy + half) * size() + dx + half];
  }
};

// Weight clamp(radius + 0.5 - |d|, 0, 1) per tap, normalized.
DiskKernel MakeDiskKernel(double radius);
Rgb8Image DefocusCorrupt(const Rgb8Image& image, const DefocusParams& params);

}  // namespace skyblight

#endif  // SKYBLIGHT_CORRUPTION_CORRUPTIONS_H_
