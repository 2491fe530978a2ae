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

#ifndef CATT_ERROR_H_
#define CATT_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace catt {

// Stable diagnostic codes, printed as E01..E07.
enum class ErrorCode {
  kSyntax = 1,
  kScope = 2,
  kTypeMismatch = 3,
  kNotPsContext = 4,
  kSideCondition = 5,
  kArity = 6,
  kDuplicate = 7,
};

std::string code_name(ErrorCode code);

struct SourceLoc {
  int line = 0;
  int col = 0;
};

// One frame of the judgment stack active when an error was raised: the rule
// being applied and the premise under scrutiny.
struct JudgmentFrame {
  std::string_view rule;
  std::string_view premise;
};

class CattError : public std::runtime_error {
 public:
  // Captures the calling thread's current judgment stack.
  CattError(ErrorCode code, std::string message);

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }
  const std::vector<JudgmentFrame>& judgments() const { return judgments_; }

  const std::optional<SourceLoc>& loc() const { return loc_; }
  void set_loc(SourceLoc loc) { loc_ = loc; }

 private:
  ErrorCode code_;
  std::string message_;
  std::vector<JudgmentFrame> judgments_;
  std::optional<SourceLoc> loc_;
};

[[noreturn]] void fail(ErrorCode code, std::string message);

// RAII push of a judgment frame on a thread-local stack. Both views must
// outlive the scope; in practice they are string literals.
class JudgmentScope {
 public:
  JudgmentScope(std::string_view rule, std::string_view premise);
  ~JudgmentScope();
  JudgmentScope(const JudgmentScope&) = delete;
  JudgmentScope& operator=(const JudgmentScope&) = delete;
};

}  // namespace catt

#endif  // CATT_ERROR_H_
