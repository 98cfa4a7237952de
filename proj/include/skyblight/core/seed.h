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

#ifndef SKYBLIGHT_CORE_SEED_H_
#define SKYBLIGHT_CORE_SEED_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "skyblight/core/types.h"

namespace skyblight {

struct SeedContext {
  std::uint64_t global_seed = 0;
  std::int64_t image_id = 0;
  CorruptionKind kind = CorruptionKind::kFog;
  Severity severity{1};
};

std::uint64_t Fnv1a64(std::string_view bytes);

// "g=<global_seed>|img=<image_id>|c=<label>|s=<level>"
std::string CanonicalSeedString(std::uint64_t global_seed,
                                std::int64_t image_id, std::string_view label,
                                int level);

std::uint64_t DeriveSeed(const SeedContext& ctx);

// Label-based variant for streams that are not tied to a corruption kind
// (the augmentation sampler uses label "augment").
std::uint64_t DeriveSeed(std::uint64_t global_seed, std::int64_t image_id,
                         std::string_view label, int level);

}  // namespace skyblight

#endif  // SKYBLIGHT_CORE_SEED_H_
