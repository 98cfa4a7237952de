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

#include "skyblight/core/seed.h"

namespace skyblight {

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string CanonicalSeedString(std::uint64_t global_seed,
                                std::int64_t image_id, std::string_view label,
                                int level) {
  std::string out = "g=";
  out += std::to_string(global_seed);
  out += "|img=";
  out += std::to_string(image_id);
  out += "|c=";
  out += label;
  out += "|s=";
  out += std::to_string(level);
  return out;
}

std::uint64_t DeriveSeed(std::uint64_t global_seed, std::int64_t image_id,
                         std::string_view label, int level) {
  return Fnv1a64(CanonicalSeedString(global_seed, image_id, label, level));
}

std::uint64_t DeriveSeed(const SeedContext& ctx) {
  return DeriveSeed(ctx.global_seed, ctx.image_id, KindName(ctx.kind),
                    ctx.severity.level());
}

}  // namespace skyblight
