// Copyright 2026 The cattcheck Authors
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

#ifndef CATT_CLI_H_
#define CATT_CLI_H_

#include <ostream>

namespace catt {

// Exit codes of the batch driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Checks the files named on the command line in order, sharing one
// environment. Returns one of the exit codes above.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace catt

#endif  // CATT_CLI_H_
