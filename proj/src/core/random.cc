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

#include "skyblight/core/random.h"

#include <cmath>
#include <numbers>

namespace skyblight {
namespace {

constexpr std::uint64_t Rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t SplitMix64Next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& word : s_) word = SplitMix64Next(state);
}

std::uint64_t RandomStream::NextU64() {
  const std::uint64_t result = Rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = Rotl(s_[3], 45);
  return result;
}

double RandomStream::Uniform() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

double RandomStream::Uniform(double lo, double hi) {
  return lo + (hi - lo) * Uniform();
}

double RandomStream::Normal(double mean, double sigma) {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - Uniform();
  const double u2 = Uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return mean + sigma * radius * std::cos(2.0 * std::numbers::pi * u2);
}

std::int64_t RandomStream::Poisson(double lambda) {
  return PoissonSampler(lambda).Sample(*this);
}

PoissonSampler::PoissonSampler(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0)) return;
  exp_neg_ = std::exp(-lambda);
  if (lambda < 10.0) return;
  // W. Hormann, "The transformed rejection method for generating Poisson
  // random variables", 1993.
  loglam_ = std::log(lambda);
  b_ = 0.931 + 2.53 * std::sqrt(lambda);
  a_ = -0.059 + 0.02483 * b_;
  log_invalpha_ = std::log(1.1239 + 1.1328 / (b_ - 3.4));
  vr_ = 0.9277 - 3.6224 / (b_ - 2.0);
}

std::int64_t PoissonSampler::Sample(RandomStream& rng) const {
  if (!(lambda_ > 0.0)) return 0;
  if (lambda_ < 10.0) {
    const double u = rng.Uniform();
    double p = exp_neg_;
    double cdf = p;
    std::int64_t k = 0;
    // The cap only matters for u within rounding of 1.
    while (u >= cdf && k < 1000) {
      ++k;
      p *= lambda_ / static_cast<double>(k);
      cdf += p;
    }
    return k;
  }
  for (;;) {
    const double u = rng.Uniform() - 0.5;
    const double v = rng.Uniform();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a_ / us + b_) * u + lambda_ + 0.43);
    if (us >= 0.07 && v <= vr_) return static_cast<std::int64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v) + log_invalpha_ - std::log(a_ / (us * us) + b_);
    const double rhs = -lambda_ + k * loglam_ - std::lgamma(k + 1.0);
    if (lhs <= rhs) return static_cast<std::int64_t>(k);
  }
}

}  // namespace skyblight
