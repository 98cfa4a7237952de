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

#include "skyblight/augment/augment.h"

#include <cmath>
#include <numeric>
#include <unordered_set>

#include "json.hpp"
#include "skyblight/core/error.h"
#include "skyblight/core/random.h"
#include "skyblight/core/seed.h"
#include "skyblight/corruption/corruptions.h"

namespace skyblight {
namespace {

using Json = nlohmann::json;

template <std::size_t N>
void CheckWeights(const std::array<double, N>& weights, const char* what) {
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " must be finite and non-negative");
    }
    sum += w;
  }
  if (!(sum > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must have a positive sum");
  }
}

template <std::size_t N>
std::size_t PickWeighted(const std::array<double, N>& weights, double u) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  const double target = u * total;
  double cum = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (weights[i] <= 0.0) continue;
    cum += weights[i];
    last_positive = i;
    if (target < cum) return i;
  }
  return last_positive;
}

}  // namespace

void AugmentPolicy::Validate() const {
  if (!(p_clean >= 0.0 && p_clean <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "p_clean must lie in [0, 1]");
  }
  CheckWeights(kind_weights, "kind weights");
  CheckWeights(severity_weights, "severity weights");
}

std::string AugmentPolicy::ToJsonText() const {
  Json kinds = Json::object();
  for (CorruptionKind k : kAllKinds) {
    kinds[std::string(KindName(k))] = kind_weights[KindIndex(k)];
  }
  return Json{{"p_clean", p_clean},
              {"kind_weights", kinds},
              {"severity_weights", severity_weights}}
      .dump();
}

AugmentPolicy AugmentPolicy::FromJsonText(std::string_view text) {
  AugmentPolicy policy;
  try {
    const Json root = Json::parse(text);
    if (root.contains("p_clean")) policy.p_clean = root.at("p_clean").get<double>();
    if (root.contains("kind_weights")) {
      policy.kind_weights.fill(0.0);
      for (const auto& [name, w] : root.at("kind_weights").items()) {
        policy.kind_weights[KindIndex(KindFromName(name))] = w.get<double>();
      }
    }
    if (root.contains("severity_weights")) {
      const Json& sw = root.at("severity_weights");
      if (!sw.is_array() || sw.size() != kNumSeverities) {
        throw Error(ErrorCode::kInvalidArgument,
                    "severity_weights needs exactly 4 values");
      }
      for (int i = 0; i < kNumSeverities; ++i) {
        policy.severity_weights[i] = sw.at(i).get<double>();
      }
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("bad policy JSON: ") + e.what());
  }
  policy.Validate();
  return policy;
}

AugmentDecision SampleDecision(std::int64_t image_id,
                               const AugmentPolicy& policy,
                               std::uint64_t epoch_seed,
                               const ParamSchedule& schedule) {
  RandomStream rng(DeriveSeed(epoch_seed, image_id, kAugmentLabel, 1));
  AugmentDecision decision{image_id, std::nullopt};
  if (rng.Uniform() < policy.p_clean) return decision;
  const CorruptionKind kind =
      kAllKinds[PickWeighted(policy.kind_weights, rng.Uniform())];
  const Severity severity =
      kAllSeverities[PickWeighted(policy.severity_weights, rng.Uniform())];
  decision.spec = schedule.Resolve(kind, severity);
  return decision;
}

AugmentPlan SamplePlan(const std::vector<std::int64_t>& image_ids,
                       const AugmentPolicy& policy, std::uint64_t epoch_seed,
                       const ParamSchedule& schedule) {
  policy.Validate();
  AugmentPlan plan{epoch_seed, policy, {}};
  plan.decisions.reserve(image_ids.size());
  std::unordered_set<std::int64_t> seen;
  for (std::int64_t id : image_ids) {
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate image id " + std::to_string(id));
    }
    plan.decisions.push_back(SampleDecision(id, policy, epoch_seed, schedule));
  }
  return plan;
}

Rgb8Image ApplyPlanEntry(const Rgb8Image& image,
                         const AugmentDecision& decision,
                         std::uint64_t epoch_seed) {
  if (decision.clean()) return image;
  const CorruptionSpec& spec = *decision.spec;
  return ApplyCorruption(
      image, spec,
      DeriveSeed(SeedContext{epoch_seed, decision.image_id, spec.kind,
                             spec.severity}));
}

std::string SerializePlan(const AugmentPlan& plan) {
  Json decisions = Json::array();
  for (const AugmentDecision& d : plan.decisions) {
    if (d.clean()) {
      decisions.push_back({{"image_id", d.image_id}, {"clean", true}});
    } else {
      decisions.push_back({{"image_id", d.image_id},
                           {"kind", KindName(d.spec->kind)},
                           {"severity", d.spec->severity.level()},
                           {"params", Json::parse(ParamsToJsonText(d.spec->params))}});
    }
  }
  // String copy for readers that parse numbers as doubles.
  return Json{{"epoch_seed", plan.epoch_seed},
              {"epoch_seed_str", std::to_string(plan.epoch_seed)},
              {"policy", Json::parse(plan.policy.ToJsonText())},
              {"decisions", decisions}}
             .dump(1) +
         "\n";
}

AugmentPlan ParsePlan(std::string_view text, const ParamSchedule& schedule) {
  AugmentPlan plan;
  try {
    const Json root = Json::parse(text);
    plan.epoch_seed = root.at("epoch_seed").get<std::uint64_t>();
    plan.policy = AugmentPolicy::FromJsonText(root.at("policy").dump());
    for (const Json& d : root.at("decisions")) {
      AugmentDecision decision{d.at("image_id").get<std::int64_t>(),
                               std::nullopt};
      if (!d.value("clean", false)) {
        decision.spec =
            schedule.Resolve(KindFromName(d.at("kind").get<std::string>()),
                             Severity(d.at("severity").get<int>()));
      }
      plan.decisions.push_back(std::move(decision));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("bad plan JSON: ") + e.what());
  }
  return plan;
}

}  // namespace skyblight
