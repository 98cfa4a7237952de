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

#ifndef SKYBLIGHT_AUGMENT_AUGMENT_H_
#define SKYBLIGHT_AUGMENT_AUGMENT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skyblight/core/image.h"
#include "skyblight/core/types.h"
#include "skyblight/corruption/schedule.h"

namespace skyblight {

inline constexpr char kAugmentLabel[] = "augment";

struct AugmentPolicy {
  double p_clean = 0.5;
  std::array<double, kNumCorruptionKinds> kind_weights{1, 1, 1, 1, 1, 1, 1};
  std::array<double, kNumSeverities> severity_weights{1, 1, 1, 1};

  // Throws kInvalidArgument: p_clean outside [0, 1], negative or non-finite
  // weights, or a weight vector summing to zero.
  void Validate() const;

  // JSON form used in plan headers and --policy files:
  // {"p_clean", "kind_weights": {name: w}, "severity_weights": [w1..w4]}.
  // Kinds missing from kind_weights get weight 0.
  std::string ToJsonText() const;
  static AugmentPolicy FromJsonText(std::string_view text);

  friend bool operator==(const AugmentPolicy&, const AugmentPolicy&) = default;
};

struct AugmentDecision {
  std::int64_t image_id = 0;
  std::optional<CorruptionSpec> spec;  // empty = clean

  bool clean() const { return !spec.has_value(); }
  friend bool operator==(const AugmentDecision&,
                         const AugmentDecision&) = default;
};

struct AugmentPlan {
  std::uint64_t epoch_seed = 0;
  AugmentPolicy policy;
  std::vector<AugmentDecision> decisions;

  friend bool operator==(const AugmentPlan&, const AugmentPlan&) = default;
};

// Depends only on (image_id, policy, epoch_seed, schedule).
AugmentDecision SampleDecision(std::int64_t image_id,
                               const AugmentPolicy& policy,
                               std::uint64_t epoch_seed,
                               const ParamSchedule& schedule =
                                   ParamSchedule::Default());

// Throws kInvalidArgument on duplicate ids or an invalid policy.
AugmentPlan SamplePlan(const std::vector<std::int64_t>& image_ids,
                       const AugmentPolicy& policy, std::uint64_t epoch_seed,
                       const ParamSchedule& schedule = ParamSchedule::Default());

// Clean decisions return the input unchanged; boxes never move.
Rgb8Image ApplyPlanEntry(const Rgb8Image& image,
                         const AugmentDecision& decision,
                         std::uint64_t epoch_seed);

std::string SerializePlan(const AugmentPlan& plan);
// Specs are re-resolved against `schedule`.
AugmentPlan ParsePlan(std::string_view text,
                      const ParamSchedule& schedule = ParamSchedule::Default());

}  // namespace skyblight

#endif  // SKYBLIGHT_AUGMENT_AUGMENT_H_
