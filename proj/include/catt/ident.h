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

#ifndef CATT_IDENT_H_
#define CATT_IDENT_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace catt {

// An interned identifier. Two Idents are equal iff they point at the same
// pooled string, so comparison and hashing are pointer operations.
//
// Valid names start with a letter and continue with letters, digits, or one
// of `_`, `'`, `-`.
class Ident {
 public:
  // Throws std::invalid_argument on a malformed name.
  explicit Ident(std::string_view name);

  static bool is_valid(std::string_view name);

  std::string_view str() const { return *name_; }
  const std::string& string() const { return *name_; }

  friend bool operator==(Ident a, Ident b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Ident a, Ident b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return a.str().compare(b.str()) < 0 ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
  }

  std::size_t hash() const { return std::hash<const void*>{}(name_); }

 private:
  const std::string* name_;
};

inline std::ostream& operator<<(std::ostream& os, Ident id) {
  return os << id.str();
}

}  // namespace catt

template <>
struct std::hash<catt::Ident> {
  std::size_t operator()(catt::Ident id) const noexcept { return id.hash(); }
};

#endif  // CATT_IDENT_H_
