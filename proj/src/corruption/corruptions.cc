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

#include "skyblight/corruption/corruptions.h"

#include "skyblight/core/error.h"

namespace skyblight {
namespace {

template <typename T>
const T& ParamsAs(const CorruptionSpec& spec) {
  if (const T* p = std::get_if<T>(&spec.params)) return *p;
  throw Error(ErrorCode::kInvalidArgument,
              std::string("parameter record does not match kind ") +
                  std::string(KindName(spec.kind)));
}

}  // namespace

Rgb8Image ApplyCorruption(const Rgb8Image& image, const CorruptionSpec& spec,
                          std::uint64_t seed) {
  switch (spec.kind) {
    case CorruptionKind::kFog:
      return FogCorrupt(image, ParamsAs<FogParams>(spec), seed);
    case CorruptionKind::kRain:
      return RainCorrupt(image, ParamsAs<RainParams>(spec), seed);
    case CorruptionKind::kLowLight:
      return LowLightCorrupt(image, ParamsAs<LowLightParams>(spec), seed);
    case CorruptionKind::kColorQuant:
      return ColorQuantCorrupt(image, ParamsAs<ColorQuantParams>(spec));
    case CorruptionKind::kIsoNoise:
      return IsoNoiseCorrupt(image, ParamsAs<IsoNoiseParams>(spec), seed);
    case CorruptionKind::kFarFocus:
    case CorruptionKind::kNearFocus:
      return DefocusCorrupt(image, ParamsAs<DefocusParams>(spec));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown corruption kind");
}

}  // namespace skyblight
