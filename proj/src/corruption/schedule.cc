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

#include "skyblight/corruption/schedule.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skyblight/core/error.h"

namespace skyblight {
namespace {

using nlohmann::json;

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidSchedule, what);
}

// Value of the distortion-controlling scalar and its direction (+1 means it
// grows with severity).
struct Controlling {
  double value;
  int direction;
};

Controlling ControllingScalar(const CorruptionParams& params) {
  return std::visit(
      [](const auto& p) -> Controlling {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FogParams>) {
          return {p.intensity, +1};
        } else if constexpr (std::is_same_v<T, RainParams>) {
          return {p.density, +1};
        } else if constexpr (std::is_same_v<T, LowLightParams>) {
          return {p.scale, -1};
        } else if constexpr (std::is_same_v<T, IsoNoiseParams>) {
          return {p.photons, -1};
        } else if constexpr (std::is_same_v<T, ColorQuantParams>) {
          return {static_cast<double>(p.bits), -1};
        } else {
          return {p.radius, +1};
        }
      },
      params);
}

bool HoldsExpected(CorruptionKind kind, const CorruptionParams& params) {
  switch (kind) {
    case CorruptionKind::kFog:
      return std::holds_alternative<FogParams>(params);
    case CorruptionKind::kRain:
      return std::holds_alternative<RainParams>(params);
    case CorruptionKind::kLowLight:
      return std::holds_alternative<LowLightParams>(params);
    case CorruptionKind::kIsoNoise:
      return std::holds_alternative<IsoNoiseParams>(params);
    case CorruptionKind::kColorQuant:
      return std::holds_alternative<ColorQuantParams>(params);
    case CorruptionKind::kFarFocus:
    case CorruptionKind::kNearFocus:
      return std::holds_alternative<DefocusParams>(params);
  }
  return false;
}

double Field(const json& record, const char* key, const std::string& where) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_number()) {
    Invalid(where + ": missing numeric field '" + key + "'");
  }
  return it->get<double>();
}

CorruptionParams ParseRecord(CorruptionKind kind, const json& record,
                             const std::string& where) {
  if (!record.is_object()) Invalid(where + ": record must be an object");
  switch (kind) {
    case CorruptionKind::kFog:
      return FogParams{Field(record, "intensity", where),
                       Field(record, "decay", where)};
    case CorruptionKind::kRain:
      return RainParams{Field(record, "density", where),
                        Field(record, "length", where),
                        Field(record, "opacity", where),
                        Field(record, "contrast_scale", where)};
    case CorruptionKind::kLowLight:
      return LowLightParams{Field(record, "scale", where),
                            Field(record, "photons", where),
                            Field(record, "read_sigma", where)};
    case CorruptionKind::kIsoNoise:
      return IsoNoiseParams{Field(record, "photons", where),
                            Field(record, "read_sigma", where)};
    case CorruptionKind::kColorQuant: {
      auto it = record.find("bits");
      if (it == record.end() || !it->is_number_integer()) {
        Invalid(where + ": missing integer field 'bits'");
      }
      return ColorQuantParams{it->get<int>()};
    }
    case CorruptionKind::kFarFocus:
    case CorruptionKind::kNearFocus:
      return DefocusParams{Field(record, "radius", where)};
  }
  Invalid(where + ": unknown kind");
}

json RecordToJson(const CorruptionParams& params) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FogParams>) {
          return {{"intensity", p.intensity}, {"decay", p.decay}};
        } else if constexpr (std::is_same_v<T, RainParams>) {
          return {{"density", p.density},
                  {"length", p.length},
                  {"opacity", p.opacity},
                  {"contrast_scale", p.contrast_scale}};
        } else if constexpr (std::is_same_v<T, LowLightParams>) {
          return {{"scale", p.scale},
                  {"photons", p.photons},
                  {"read_sigma", p.read_sigma}};
        } else if constexpr (std::is_same_v<T, IsoNoiseParams>) {
          return {{"photons", p.photons}, {"read_sigma", p.read_sigma}};
        } else if constexpr (std::is_same_v<T, ColorQuantParams>) {
          return {{"bits", p.bits}};
        } else {
          return {{"radius", p.radius}};
        }
      },
      params);
}

}  // namespace

ParamSchedule ParamSchedule::Default() {
  ParamSchedule s;
  auto& fog = s.rows_[KindIndex(CorruptionKind::kFog)];
  fog = {FogParams{1.5, 0.70}, FogParams{2.0, 0.62}, FogParams{2.5, 0.55},
         FogParams{3.0, 0.48}};
  auto& rain = s.rows_[KindIndex(CorruptionKind::kRain)];
  rain = {RainParams{120, 18, 0.25, 0.95}, RainParams{240, 24, 0.35, 0.90},
          RainParams{480, 30, 0.45, 0.85}, RainParams{800, 38, 0.55, 0.80}};
  auto& low = s.rows_[KindIndex(CorruptionKind::kLowLight)];
  low = {LowLightParams{0.60, 60, 0.02}, LowLightParams{0.48, 40, 0.03},
         LowLightParams{0.39, 25, 0.04}, LowLightParams{0.30, 15, 0.06}};
  auto& iso = s.rows_[KindIndex(CorruptionKind::kIsoNoise)];
  iso = {IsoNoiseParams{200, 0.02}, IsoNoiseParams{100, 0.04},
         IsoNoiseParams{50, 0.06}, IsoNoiseParams{25, 0.08}};
  auto& quant = s.rows_[KindIndex(CorruptionKind::kColorQuant)];
  quant = {ColorQuantParams{5}, ColorQuantParams{4}, ColorQuantParams{3},
           ColorQuantParams{2}};
  auto& far = s.rows_[KindIndex(CorruptionKind::kFarFocus)];
  far = {DefocusParams{1.5}, DefocusParams{2.5}, DefocusParams{3.5},
         DefocusParams{4.5}};
  auto& near = s.rows_[KindIndex(CorruptionKind::kNearFocus)];
  near = {DefocusParams{2.5}, DefocusParams{3.5}, DefocusParams{4.5},
          DefocusParams{5.5}};
  return s;
}

ParamSchedule ParamSchedule::FromJsonText(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    Invalid(std::string("schedule: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) Invalid("schedule: top level must be an object");
  ParamSchedule s = Default();
  for (const auto& [name, rows] : root.items()) {
    const auto kind = ParseKind(name);
    if (!kind) Invalid("schedule: unknown corruption kind '" + name + "'");
    if (!rows.is_array() || rows.size() != kNumSeverities) {
      Invalid("schedule: '" + name + "' must list exactly 4 records");
    }
    for (int i = 0; i < kNumSeverities; ++i) {
      s.rows_[KindIndex(*kind)][i] = ParseRecord(
          *kind, rows[i], name + "[" + std::to_string(i + 1) + "]");
    }
  }
  s.Validate();
  return s;
}

ParamSchedule ParamSchedule::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure,
                "cannot open schedule " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return FromJsonText(text.str());
}

const CorruptionParams& ParamSchedule::At(CorruptionKind kind,
                                          Severity severity) const {
  return rows_[KindIndex(kind)][severity.index()];
}

CorruptionSpec ParamSchedule::Resolve(CorruptionKind kind,
                                      Severity severity) const {
  static const ParamSchedule kDefault = Default();
  CorruptionSpec spec{kind, severity, At(kind, severity), false};
  spec.overridden = !(spec.params == kDefault.At(kind, severity));
  return spec;
}

void ValidateParams(CorruptionKind kind, const CorruptionParams& params) {
  const std::string where(KindName(kind));
  if (!HoldsExpected(kind, params)) {
    Invalid(where + ": parameter record of the wrong kind");
  }
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FogParams>) {
          if (!(p.intensity > 0)) Invalid(where + ": intensity must be > 0");
          if (!(p.decay > 0 && p.decay <= 1)) {
            Invalid(where + ": decay must be in (0, 1]");
          }
        } else if constexpr (std::is_same_v<T, RainParams>) {
          if (!(p.density >= 0)) Invalid(where + ": density must be >= 0");
          if (!(p.length > 0)) Invalid(where + ": length must be > 0");
          if (!(p.opacity >= 0 && p.opacity <= 1)) {
            Invalid(where + ": opacity must be in [0, 1]");
          }
          if (!(p.contrast_scale >= 0 && p.contrast_scale <= 1)) {
            Invalid(where + ": contrast_scale must be in [0, 1]");
          }
        } else if constexpr (std::is_same_v<T, LowLightParams>) {
          if (!(p.scale > 0 && p.scale <= 1)) {
            Invalid(where + ": scale must be in (0, 1]");
          }
          if (!(p.photons > 0)) Invalid(where + ": photons must be > 0");
          if (!(p.read_sigma >= 0)) {
            Invalid(where + ": read_sigma must be >= 0");
          }
        } else if constexpr (std::is_same_v<T, IsoNoiseParams>) {
          if (!(p.photons > 0)) Invalid(where + ": photons must be > 0");
          if (!(p.read_sigma >= 0)) {
            Invalid(where + ": read_sigma must be >= 0");
          }
        } else if constexpr (std::is_same_v<T, ColorQuantParams>) {
          if (p.bits < 1 || p.bits > 7) {
            Invalid(where + ": bits must be in [1, 7]");
          }
        } else {
          if (!(p.radius >= 0)) Invalid(where + ": radius must be >= 0");
        }
      },
      params);
}

void ParamSchedule::Validate() const {
  for (CorruptionKind kind : kAllKinds) {
    const auto& rows = rows_[KindIndex(kind)];
    for (const auto& row : rows) ValidateParams(kind, row);
    for (int i = 1; i < kNumSeverities; ++i) {
      const Controlling prev = ControllingScalar(rows[i - 1]);
      const Controlling cur = ControllingScalar(rows[i]);
      const bool ok = prev.direction > 0 ? cur.value > prev.value
                                         : cur.value < prev.value;
      if (!ok) {
        Invalid(std::string(KindName(kind)) +
                ": controlling parameter is not strictly " +
                (prev.direction > 0 ? "increasing" : "decreasing") +
                " between severities " + std::to_string(i) + " and " +
                std::to_string(i + 1));
      }
    }
  }
}

std::string ParamsToJsonText(const CorruptionParams& params) {
  return RecordToJson(params).dump();
}

std::string ParamSchedule::ToJsonText() const {
  json root = json::object();
  for (CorruptionKind kind : kAllKinds) {
    json rows = json::array();
    for (const auto& row : rows_[KindIndex(kind)]) {
      rows.push_back(RecordToJson(row));
    }
    root[std::string(KindName(kind))] = std::move(rows);
  }
  return root.dump(1);
}

}  // namespace skyblight
