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

#ifndef SKYBLIGHT_CORE_RANDOM_H_
#define SKYBLIGHT_CORE_RANDOM_H_

#include <cstdint>

namespace skyblight {

std::uint64_t SplitMix64Next(std::uint64_t& state);

// xoshiro256++ seeded through splitmix64. Every sampler used by the
// corruption engine is pinned here so streams reproduce bit for bit.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t NextU64();

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform();
  double Uniform(double lo, double hi);

  // Box-Muller, cosine branch; consumes two uniforms per call.
  double Normal(double mean, double sigma);

  // Inversion by sequential search for lambda < 10, Hormann's PTRS
  // transformed rejection otherwise. lambda <= 0 returns 0.
  std::int64_t Poisson(double lambda);

 private:
  std::uint64_t s_[4];
};

// Poisson draws for one fixed lambda with the setup hoisted out of the
// loop; Sample(rng) consumes the stream exactly like rng.Poisson(lambda).
class PoissonSampler {
 public:
  explicit PoissonSampler(double lambda);

  std::int64_t Sample(RandomStream& rng) const;

 private:
  double lambda_ = 0.0;
  double exp_neg_ = 0.0;
  double loglam_ = 0.0;
  double a_ = 0.0;
  double b_ = 0.0;
  double log_invalpha_ = 0.0;
  double vr_ = 0.0;
};

}  // namespace skyblight

#endif  // SKYBLIGHT_CORE_RANDOM_H_
