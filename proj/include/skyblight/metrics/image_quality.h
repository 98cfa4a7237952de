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

#ifndef SKYBLIGHT_METRICS_IMAGE_QUALITY_H_
#define SKYBLIGHT_METRICS_IMAGE_QUALITY_H_

#include "skyblight/core/image.h"

namespace skyblight {

// Identical images would give +inf; reports cap PSNR here instead.
inline constexpr double kPsnrCapDb = 100.0;

// PSNR in dB over all channels, peak 255, capped at kPsnrCapDb. Throws
// kInvalidArgument on mismatched sizes.
double Psnr(const Rgb8Image& reference, const Rgb8Image& test);

}  // namespace skyblight

#endif  // SKYBLIGHT_METRICS_IMAGE_QUALITY_H_
