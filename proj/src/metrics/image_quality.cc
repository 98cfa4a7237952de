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

#include "skyblight/metrics/image_quality.h"

#include <algorithm>
#include <cmath>

#include "skyblight/core/error.h"

namespace skyblight {

double Psnr(const Rgb8Image& reference, const Rgb8Image& test) {
  if (reference.width() != test.width() ||
      reference.height() != test.height()) {
    throw Error(ErrorCode::kInvalidArgument, "PSNR needs equally sized images");
  }
  const auto a = reference.pixels();
  const auto b = test.pixels();
  std::uint64_t sq = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
    sq += static_cast<std::uint64_t>(d * d);
  }
  if (sq == 0) return kPsnrCapDb;
  const double mse = static_cast<double>(sq) / static_cast<double>(a.size());
  return std::min(kPsnrCapDb, 10.0 * std::log10(255.0 * 255.0 / mse));
}

}  // namespace skyblight
