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
#include <array>
#include <vector>

#include "skyblight/core/color.h"
#include "skyblight/core/random.h"
#include "skyblight/corruption/corruptions.h"

namespace skyblight {

Rgb8Image LowLightCorrupt(const Rgb8Image& image, const LowLightParams& params,
                          std::uint64_t seed) {
  RandomStream rng(seed);
  Rgb8Image out(image.width(), image.height());
  const auto src = image.pixels();
  auto dst = out.mutable_pixels();
  std::vector<PoissonSampler> samplers;
  samplers.reserve(256);
  for (int v = 0; v < 256; ++v) {
    const double signal = DecodeGamma(static_cast<std::uint8_t>(v)) * params.scale;
    samplers.emplace_back(signal * params.photons);
  }
  // Stream order: row-major pixels, channels r, g, b, Poisson then Normal.
  for (std::size_t i = 0; i < src.size(); ++i) {
    const double photons = static_cast<double>(samplers[src[i]].Sample(rng));
    double value = photons / params.photons;
    if (params.read_sigma > 0.0) value += rng.Normal(0.0, params.read_sigma);
    dst[i] = EncodeGamma(std::clamp(value, 0.0, 1.0));
  }
  return out;
}

Rgb8Image IsoNoiseCorrupt(const Rgb8Image& image, const IsoNoiseParams& params,
                          std::uint64_t seed) {
  return LowLightCorrupt(
      image, LowLightParams{1.0, params.photons, params.read_sigma}, seed);
}

std::uint8_t QuantizeChannel(std::uint8_t value, int bits) {
  // q(v) = round(round(v * (L - 1) / 255) * 255 / (L - 1)), L = 2^bits, in
  // exact integer arithmetic (all terms are non-negative, so half-up equals
  // half-away-from-zero).
  const int top = (1 << bits) - 1;
  const int level = (2 * value * top + 255) / 510;
  return static_cast<std::uint8_t>((2 * level * 255 + top) / (2 * top));
}

Rgb8Image ColorQuantCorrupt(const Rgb8Image& image,
                            const ColorQuantParams& params) {
  std::array<std::uint8_t, 256> table;
  for (int v = 0; v < 256; ++v) {
    table[v] = QuantizeChannel(static_cast<std::uint8_t>(v), params.bits);
  }
  Rgb8Image out = image;
  for (auto& v : out.mutable_pixels()) v = table[v];
  return out;
}

}  // namespace skyblight
