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

#include "skyblight/core/error.h"

namespace skyblight {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kMalformedManifest:
      return "MalformedManifest";
    case ErrorCode::kDanglingReference:
      return "DanglingReference";
    case ErrorCode::kUnsupportedFormat:
      return "UnsupportedFormat";
    case ErrorCode::kIoFailure:
      return "IoFailure";
    case ErrorCode::kDegenerateBox:
      return "DegenerateBox";
    case ErrorCode::kUnknownImageId:
      return "UnknownImageId";
    case ErrorCode::kIncompleteTable:
      return "IncompleteTable";
    case ErrorCode::kInvalidSchedule:
      return "InvalidSchedule";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace skyblight
