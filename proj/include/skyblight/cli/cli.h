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

#ifndef SKYBLIGHT_CLI_CLI_H_
#define SKYBLIGHT_CLI_CLI_H_

#include <ostream>

namespace skyblight {

enum ExitStatus : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitPartialFailure = 2,
  kExitInternalError = 3,
};

// Entry point shared by the binary and the tests.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace skyblight

#endif  // SKYBLIGHT_CLI_CLI_H_
