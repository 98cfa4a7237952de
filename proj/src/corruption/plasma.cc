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

#include "skyblight/corruption/plasma.h"

#include <algorithm>
#include <string>

#include "skyblight/core/error.h"
#include "skyblight/core/random.h"

namespace skyblight {

PlasmaField PlasmaFractal(std::uint32_t width, std::uint32_t height,
                          double roughness, std::uint64_t seed) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::kInvalidArgument, "plasma extent must be >= 1");
  }
  if (!(roughness > 0.0 && roughness <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "plasma roughness must be in (0, 1]");
  }
  const std::uint32_t extent = std::max(width, height);
  std::size_t n = 1;  // grid side, 2^k + 1 once k >= 1
  std::size_t cells = 0;
  while (n < extent) {
    cells = cells == 0 ? 1 : cells * 2;
    n = cells + 1;
  }

  RandomStream rng(seed);
  std::vector<double> grid(n * n, 0.0);
  auto cell = [&](std::size_t x, std::size_t y) -> double& {
    return grid[y * n + x];
  };

  double amplitude = 1.0;
  if (n > 1) {
    cell(0, 0) = rng.Uniform(-amplitude, amplitude);
    cell(n - 1, 0) = rng.Uniform(-amplitude, amplitude);
    cell(0, n - 1) = rng.Uniform(-amplitude, amplitude);
    cell(n - 1, n - 1) = rng.Uniform(-amplitude, amplitude);
  }
  for (std::size_t step = n - 1; step > 1; step /= 2) {
    const std::size_t half = step / 2;
    amplitude *= roughness;
    // Diamond: square centres take the mean of their four corners.
    for (std::size_t y = half; y < n; y += step) {
      for (std::size_t x = half; x < n; x += step) {
        const double mean = (cell(x - half, y - half) + cell(x + half, y - half) +
                             cell(x - half, y + half) + cell(x + half, y + half)) /
                            4.0;
        cell(x, y) = mean + rng.Uniform(-amplitude, amplitude);
      }
    }
    // Square: edge midpoints average the neighbours that exist.
    for (std::size_t y = 0; y < n; y += half) {
      const std::size_t start = (y / half) % 2 == 0 ? half : 0;
      for (std::size_t x = start; x < n; x += step) {
        double sum = 0.0;
        int count = 0;
        if (x >= half) { sum += cell(x - half, y); ++count; }
        if (x + half < n) { sum += cell(x + half, y); ++count; }
        if (y >= half) { sum += cell(x, y - half); ++count; }
        if (y + half < n) { sum += cell(x, y + half); ++count; }
        cell(x, y) = sum / count + rng.Uniform(-amplitude, amplitude);
      }
    }
  }

  PlasmaField field{width, height, {}};
  field.values.resize(static_cast<std::size_t>(width) * height);
  double lo = cell(0, 0);
  double hi = lo;
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x) {
      const double v = cell(x, y);
      field.values[static_cast<std::size_t>(y) * width + x] = v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const double range = hi - lo;
  for (double& v : field.values) {
    v = range > 0.0 ? std::clamp((v - lo) / range, 0.0, 1.0) : 0.0;
  }
  return field;
}

}  // namespace skyblight
