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

#include "catt/error.h"

#include <utility>

namespace catt {
namespace {

thread_local std::vector<JudgmentFrame> judgment_stack;

}  // namespace

std::string code_name(ErrorCode code) {
  int n = static_cast<int>(code);
  return std::string("E0") + static_cast<char>('0' + n);
}

CattError::CattError(ErrorCode code, std::string message)
    : std::runtime_error(code_name(code) + ": " + message),
      code_(code),
      message_(std::move(message)),
      judgments_(judgment_stack) {}

void fail(ErrorCode code, std::string message) {
  throw CattError(code, std::move(message));
}

JudgmentScope::JudgmentScope(std::string_view rule, std::string_view premise) {
  judgment_stack.push_back({rule, premise});
}

JudgmentScope::~JudgmentScope() { judgment_stack.pop_back(); }

}  // namespace catt
