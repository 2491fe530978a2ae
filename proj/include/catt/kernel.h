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

#ifndef CATT_KERNEL_H_
#define CATT_KERNEL_H_

// The trusted checker. Every judgment of the theory is decided here; nothing
// outside this module can put a declaration into an Environment.

#include <cstddef>
#include <memory>
#include <unordered_map>
#include <variant>
#include <vector>

#include "catt/ident.h"
#include "catt/pasting.h"
#include "catt/syntax.h"

namespace catt {

struct CoherenceDecl {
  std::shared_ptr<const Coherence> coh;
  PsContext ps;
};

// Let-definitions are macros: uses are expanded at elaboration time.
struct LetDef {
  Ident name;
  Context ctx;
  Term body;
  Type ty;
};

using Declaration = std::variant<CoherenceDecl, LetDef>;

// Append-only store of checked declarations.
class Environment {
 public:
  const Declaration* find(Ident name) const;
  bool contains(Ident name) const { return index_.count(name) != 0; }

  // Checks the telescope and the coherence side conditions (E04/E05), and
  // rejects names already bound (E07).
  const CoherenceDecl& declare_coherence(Ident name, const Context& ctx,
                                         const Type& ty);
  // Checks the context and infers the body's type.
  const LetDef& declare_let(Ident name, const Context& ctx, const Term& body);

  // True if a coherence with the same key was checked into this environment.
  bool verified(const Coherence& coh) const;

  std::size_t size() const { return decls_.size(); }
  const std::vector<Declaration>& declarations() const { return decls_; }

 private:
  void require_fresh(Ident name) const;

  std::vector<Declaration> decls_;
  std::unordered_map<Ident, std::size_t> index_;
  std::unordered_multimap<std::size_t, std::size_t> by_key_;
};

Ident decl_name(const Declaration& d);

void check_ctx(const Environment& env, const Context& ctx);
void check_type(const Environment& env, const Context& ctx, const Type& ty);
Type infer_term(const Environment& env, const Context& ctx, const Term& t);
// Checks `sub` as a substitution ctx -> target.
void check_sub(const Environment& env, const Context& ctx,
               const Substitution& sub, const Context& target);

// Decides which coherence rule accepts `ty` over `ctx`. Throws E04 if `ctx`
// is not a ps-context, E03 if `ty` is ill-formed, and E05 if neither side
// condition holds, listing the unused and extra variables per side.
CohKind check_coh_decl(const Environment& env, const Context& ctx,
                       const Type& ty);

// The variables d0, d1, ... of the disk and sphere contexts.
Ident disk_var(int i);
// S^n for n >= -1, with S^-1 empty.
Context sphere_ctx(int n);
// D^n for n >= 0.
Context disk_ctx(int n);
// U_n: the type of the top variable of D^n.
Type disk_type(int n);

// Familial representability: a type of dimension n - 1 is a substitution
// towards S^{n-1}, a term of dimension n a substitution towards D^n.
Substitution encode_type(const Environment& env, const Context& ctx,
                         const Type& ty);
Substitution encode_term(const Environment& env, const Context& ctx,
                         const Term& t);
// Throw E06 unless `sub` targets a sphere (resp. disk) context.
Type decode_type(const Context& ctx, const Substitution& sub);
Term decode_term(const Context& ctx, const Substitution& sub);

}  // namespace catt

#endif  // CATT_KERNEL_H_
