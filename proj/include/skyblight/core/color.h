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

#ifndef SKYBLIGHT_CORE_COLOR_H_
#define SKYBLIGHT_CORE_COLOR_H_

#include <cstdint>
#include <span>
#include <vector>

#include "skyblight/core/image.h"

namespace skyblight {

inline constexpr double kDisplayGamma = 2.2;

// Gamma 2.2 transfer. Decode is a 256-entry table; encode picks the byte
// whose decoded interval contains the value, which equals
// round(255 * v^(1/2.2)) and makes decode->encode exact.
double DecodeGamma(std::uint8_t value);
std::uint8_t EncodeGamma(double linear);

std::vector<float> ToLinear(const Rgb8Image& image);
Rgb8Image FromLinear(std::span<const float> linear, std::uint32_t width,
                     std::uint32_t height);

inline constexpr double kLumaR = 0.2126;
inline constexpr double kLumaG = 0.7152;
inline constexpr double kLumaB = 0.0722;

double LinearLuminance(std::uint8_t r, std::uint8_t g, std::uint8_t b);

// Mean of per-pixel linear luminance.
double MeanLinearLuminance(const Rgb8Image& image);

// Rounds half away from zero and clamps to [0, 255].
std::uint8_t ClampToByte(double value);

}  // namespace skyblight

#endif  // SKYBLIGHT_CORE_COLOR_H_
