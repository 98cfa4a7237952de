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

#ifndef SKYBLIGHT_CORE_TYPES_H_
#define SKYBLIGHT_CORE_TYPES_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace skyblight {

enum class CorruptionKind : std::uint8_t {
  kFog,
  kRain,
  kLowLight,
  kColorQuant,
  kIsoNoise,
  kFarFocus,
  kNearFocus,
};

inline constexpr int kNumCorruptionKinds = 7;
inline constexpr int kNumSeverities = 4;

// Canonical order: weather, sensor noise, defocus.
inline constexpr std::array<CorruptionKind, kNumCorruptionKinds> kAllKinds = {
    CorruptionKind::kFog,        CorruptionKind::kRain,
    CorruptionKind::kLowLight,   CorruptionKind::kColorQuant,
    CorruptionKind::kIsoNoise,   CorruptionKind::kFarFocus,
    CorruptionKind::kNearFocus,
};

std::string_view KindName(CorruptionKind kind);
std::optional<CorruptionKind> ParseKind(std::string_view name);
// Same as ParseKind but throws kInvalidArgument listing the valid names.
CorruptionKind KindFromName(std::string_view name);
int KindIndex(CorruptionKind kind);

// The three reporting groups of the benchmark.
std::string_view KindGroup(CorruptionKind kind);

class Severity {
 public:
  // Throws kInvalidArgument unless 1 <= level <= 4.
  explicit Severity(int level);

  int level() const noexcept { return level_; }
  int index() const noexcept { return level_ - 1; }

  friend bool operator==(Severity, Severity) = default;
  friend auto operator<=>(Severity, Severity) = default;

 private:
  int level_;
};

inline const std::array<Severity, kNumSeverities> kAllSeverities = {
    Severity(1), Severity(2), Severity(3), Severity(4)};

// Axis-aligned box in pixel units, COCO (x, y, w, h) convention.
struct BoxXywh {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double area() const { return w * h; }
  friend bool operator==(const BoxXywh&, const BoxXywh&) = default;
};

struct GtBox {
  std::int64_t id = 0;
  std::int64_t image_id = 0;
  std::int64_t category_id = 0;
  BoxXywh bbox;

  friend bool operator==(const GtBox&, const GtBox&) = default;
};

struct DetectionRecord {
  std::int64_t image_id = 0;
  std::int64_t category_id = 0;
  BoxXywh bbox;
  double score = 0.0;

  friend bool operator==(const DetectionRecord&,
                         const DetectionRecord&) = default;
};

}  // namespace skyblight

#endif  // SKYBLIGHT_CORE_TYPES_H_
