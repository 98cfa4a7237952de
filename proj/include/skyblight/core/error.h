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

#ifndef SKYBLIGHT_CORE_ERROR_H_
#define SKYBLIGHT_CORE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace skyblight {

enum class ErrorCode {
  kInvalidArgument,
  kMalformedManifest,
  kDanglingReference,
  kUnsupportedFormat,
  kIoFailure,
  kDegenerateBox,
  kUnknownImageId,
  kIncompleteTable,
  kInvalidSchedule,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skyblight

#endif  // SKYBLIGHT_CORE_ERROR_H_
