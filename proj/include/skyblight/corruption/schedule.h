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

#ifndef SKYBLIGHT_CORRUPTION_SCHEDULE_H_
#define SKYBLIGHT_CORRUPTION_SCHEDULE_H_

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "skyblight/core/types.h"

namespace skyblight {

struct FogParams {
  double intensity = 0.0;  // blend strength
  double decay = 0.5;      // plasma roughness, (0, 1]
  friend bool operator==(const FogParams&, const FogParams&) = default;
};

struct RainParams {
  double density = 0.0;  // streaks per megapixel
  double length = 0.0;   // px
  double opacity = 0.0;  // [0, 1]
  double contrast_scale = 1.0;
  friend bool operator==(const RainParams&, const RainParams&) = default;
};

struct LowLightParams {
  double scale = 1.0;  // linear intensity multiplier, (0, 1]
  double photons = 1.0;
  double read_sigma = 0.0;
  friend bool operator==(const LowLightParams&,
                         const LowLightParams&) = default;
};

struct IsoNoiseParams {
  double photons = 1.0;
  double read_sigma = 0.0;
  friend bool operator==(const IsoNoiseParams&,
                         const IsoNoiseParams&) = default;
};

struct ColorQuantParams {
  int bits = 8;
  friend bool operator==(const ColorQuantParams&,
                         const ColorQuantParams&) = default;
};

// Shared by far_focus and near_focus.
struct DefocusParams {
  double radius = 0.0;  // px
  friend bool operator==(const DefocusParams&, const DefocusParams&) = default;
};

using CorruptionParams =
    std::variant<FogParams, RainParams, LowLightParams, IsoNoiseParams,
                 ColorQuantParams, DefocusParams>;

struct CorruptionSpec {
  CorruptionKind kind = CorruptionKind::kFog;
  Severity severity{1};
  CorruptionParams params;
  // True when params differ from the built-in schedule row.
  bool overridden = false;

  friend bool operator==(const CorruptionSpec&,
                         const CorruptionSpec&) = default;
};

// Four parameter rows per kind, indexed by severity. The scalar that drives
// each kind is strictly monotone in severity:
//   fog intensity, rain density, far/near focus radius: increasing
//   low_light scale, iso_noise photons, color_quant bits: decreasing
class ParamSchedule {
 public:
  static ParamSchedule Default();

  // Parses the override file (kind -> list of 4 records). Kinds absent from
  // the file keep the defaults. Throws kInvalidSchedule on bad shape, range
  // or monotonicity.
  static ParamSchedule FromJsonText(std::string_view text);
  static ParamSchedule FromFile(const std::filesystem::path& path);

  const CorruptionParams& At(CorruptionKind kind, Severity severity) const;
  CorruptionSpec Resolve(CorruptionKind kind, Severity severity) const;

  // Throws kInvalidSchedule.
  void Validate() const;

  std::string ToJsonText() const;

  friend bool operator==(const ParamSchedule&, const ParamSchedule&) = default;

 private:
  std::array<std::array<CorruptionParams, kNumSeverities>, kNumCorruptionKinds>
      rows_;
};

// Range check for a single record of the given kind; throws
// kInvalidSchedule naming the offending field.
void ValidateParams(CorruptionKind kind, const CorruptionParams& params);

// One record as a compact JSON object, same keys as the override file.
std::string ParamsToJsonText(const CorruptionParams& params);

}  // namespace skyblight

#endif  // SKYBLIGHT_CORRUPTION_SCHEDULE_H_
