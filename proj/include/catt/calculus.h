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

#ifndef CATT_CALCULUS_H_
#define CATT_CALCULUS_H_

// The raw substitution calculus. Nothing here checks derivability; the
// operations are the structural definitions on raw syntax.

#include <set>

#include "catt/ident.h"
#include "catt/syntax.h"

namespace catt {

using VarSet = std::set<Ident>;

VarSet free_vars(const Term& t);
VarSet free_vars(const Type& ty);
VarSet free_vars(const Context& ctx);
VarSet free_vars(const Substitution& sub);

// Var(t : A) = Var(t) ∪ Var(A).
VarSet var_union(const Term& t, const Type& ty);

inline int dim(const Type& ty) { return ty.dim(); }
// max over the variables of dim_term; -1 for the empty context.
int dim_ctx(const Context& ctx);
// dim of the type of `t` plus one. Throws E02 on an unbound variable.
int dim_term(const Context& ctx, const Term& t);

// Throw E02 when a free variable has no image in `sub`.
Type apply_type(const Type& ty, const Substitution& sub);
Term apply_term(const Term& t, const Substitution& sub);
// delta ∘ gamma: the images of delta with gamma applied.
Substitution compose(const Substitution& delta, const Substitution& gamma);
Substitution identity(const Context& ctx);

// Nesting of coherence constructors.
int depth(const Term& t);
int depth(const Substitution& sub);

// Coherence depth. A variable contributes the coherence depth of its type in
// `ctx`, so every variable must be bound there (E02 otherwise). The
// declared type of a coherence is measured in its own ps-context.
int coherence_depth(const Context& ctx, const Type& ty);
int coherence_depth(const Context& ctx, const Term& t);
int coherence_depth(const Context& ctx, const Substitution& sub);

}  // namespace catt

#endif  // CATT_CALCULUS_H_
