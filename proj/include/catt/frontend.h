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

#ifndef CATT_FRONTEND_H_
#define CATT_FRONTEND_H_

// Surface syntax of .catt files and its elaboration into kernel terms.
//
//   file  ::= { decl }
//   decl  ::= "coh" ident tele ":" ty | "let" ident tele "=" tm
//   tele  ::= { "(" ident ":" ty ")" }
//   ty    ::= "*" | tm "->" tm
//   tm    ::= atom { atom }
//   atom  ::= ident | "(" tm ")"
//
// `#` starts a comment running to the end of the line.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "catt/error.h"
#include "catt/ident.h"
#include "catt/kernel.h"
#include "catt/syntax.h"

namespace catt {

// A name, or a name applied to at least one argument.
struct SurfaceTerm {
  Ident head;
  std::vector<SurfaceTerm> args;
  SourceLoc loc;
};

// `*` when `arrow` is empty.
struct SurfaceType {
  std::optional<std::pair<SurfaceTerm, SurfaceTerm>> arrow;
  SourceLoc loc;
};

enum class DeclKind { kCoh, kLet };

struct SurfaceDecl {
  DeclKind kind;
  Ident name;
  std::vector<std::pair<Ident, SurfaceType>> telescope;
  std::variant<SurfaceType, SurfaceTerm> rhs;
  SourceLoc loc;
};

// Equality up to source locations.
bool operator==(const SurfaceTerm& a, const SurfaceTerm& b);
bool operator==(const SurfaceType& a, const SurfaceType& b);
bool operator==(const SurfaceDecl& a, const SurfaceDecl& b);

std::string pretty(const SurfaceTerm& t);
std::string pretty(const SurfaceType& ty);
std::string pretty(const SurfaceDecl& d);

// Throws E01 with the offending location.
std::vector<SurfaceDecl> parse(std::string_view text);

// The common type of the two endpoints of an arrow. E03 if they differ.
Type infer_arrow_base(const Environment& env, const Context& ctx,
                      const Term& src, const Term& tgt);

// Applies the declaration `head` to `args`, given either for every variable
// of its context or for the locally maximal ones only. Lets are expanded.
Term elaborate_app(const Environment& env, const Context& ctx, Ident head,
                   const std::vector<Term>& args);

Term elaborate_term(const Environment& env, const Context& ctx,
                    const SurfaceTerm& t);
Type elaborate_type(const Environment& env, const Context& ctx,
                    const SurfaceType& ty);
Context elaborate_telescope(
    const Environment& env,
    const std::vector<std::pair<Ident, SurfaceType>>& telescope);

// Elaborates and checks `d` into `env`. Errors without a location get the
// location of the declaration.
const Declaration& process_decl(Environment& env, const SurfaceDecl& d);

}  // namespace catt

#endif  // CATT_FRONTEND_H_
