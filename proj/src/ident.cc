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

#include "catt/ident.h"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace catt {
namespace {

struct Pool {
  std::mutex mu;
  std::unordered_set<std::string> names;
};

Pool& pool() {
  static Pool* p = new Pool;
  return *p;
}

}  // namespace

bool Ident::is_valid(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  for (char c : name.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' &&
        c != '\'' && c != '-')
      return false;
  }
  return true;
}

Ident::Ident(std::string_view name) {
  if (!is_valid(name))
    throw std::invalid_argument("invalid identifier '" + std::string(name) +
                                "'");
  Pool& p = pool();
  std::lock_guard<std::mutex> lock(p.mu);
  // Elements of an unordered_set are address-stable across rehashing.
  name_ = &*p.names.emplace(name).first;
}

}  // namespace catt
