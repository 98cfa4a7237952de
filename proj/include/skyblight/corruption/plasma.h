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

#ifndef SKYBLIGHT_CORRUPTION_PLASMA_H_
#define SKYBLIGHT_CORRUPTION_PLASMA_H_

#include <cstdint>
#include <vector>

namespace skyblight {

struct PlasmaField {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<double> values;  // row-major, each in [0, 1]

  double at(std::uint32_t x, std::uint32_t y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
};

// Diamond-square midpoint displacement on the smallest (2^n + 1)^2 grid that
// encloses width x height. The displacement amplitude is multiplied by
// `roughness` at every halving; the crop is min-max normalized (a constant
// field normalizes to 0).
PlasmaField PlasmaFractal(std::uint32_t width, std::uint32_t height,
                          double roughness, std::uint64_t seed);

}  // namespace skyblight

#endif  // SKYBLIGHT_CORRUPTION_PLASMA_H_
