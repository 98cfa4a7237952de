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

#include "skyblight/core/types.h"

#include <string>

#include "skyblight/core/error.h"

namespace skyblight {

std::string_view KindName(CorruptionKind kind) {
  switch (kind) {
    case CorruptionKind::kFog:
      return "fog";
    case CorruptionKind::kRain:
      return "rain";
    case CorruptionKind::kLowLight:
      return "low_light";
    case CorruptionKind::kColorQuant:
      return "color_quant";
    case CorruptionKind::kIsoNoise:
      return "iso_noise";
    case CorruptionKind::kFarFocus:
      return "far_focus";
    case CorruptionKind::kNearFocus:
      return "near_focus";
  }
  return "unknown";
}

std::optional<CorruptionKind> ParseKind(std::string_view name) {
  for (CorruptionKind kind : kAllKinds) {
    if (KindName(kind) == name) return kind;
  }
  return std::nullopt;
}

CorruptionKind KindFromName(std::string_view name) {
  if (auto kind = ParseKind(name)) return *kind;
  std::string valid;
  for (CorruptionKind kind : kAllKinds) {
    if (!valid.empty()) valid += ", ";
    valid += KindName(kind);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown corruption kind '" +
                                               std::string(name) +
                                               "' (valid: " + valid + ")");
}

int KindIndex(CorruptionKind kind) { return static_cast<int>(kind); }

std::string_view KindGroup(CorruptionKind kind) {
  switch (kind) {
    case CorruptionKind::kFog:
    case CorruptionKind::kRain:
    case CorruptionKind::kLowLight:
      return "Weather";
    case CorruptionKind::kColorQuant:
    case CorruptionKind::kIsoNoise:
      return "Sensor noise";
    case CorruptionKind::kFarFocus:
    case CorruptionKind::kNearFocus:
      return "Defocus";
  }
  return "Unknown";
}

Severity::Severity(int level) : level_(level) {
  if (level < 1 || level > kNumSeverities) {
    throw Error(ErrorCode::kInvalidArgument,
                "severity must be in [1, 4], got " + std::to_string(level));
  }
}

}  // namespace skyblight
