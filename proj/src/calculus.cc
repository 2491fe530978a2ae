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

#include "catt/calculus.h"

#include <algorithm>

#include "catt/error.h"

namespace catt {
namespace {

void collect(const Term& t, VarSet& out);

void collect(const Type& ty, VarSet& out) {
  if (ty.is_obj()) return;
  collect(ty.base(), out);
  collect(ty.src(), out);
  collect(ty.tgt(), out);
}

void collect(const Substitution& sub, VarSet& out) {
  for (const auto& [target, image] : sub) collect(image, out);
}

void collect(const Term& t, VarSet& out) {
  if (t.is_var()) {
    out.insert(t.name());
    return;
  }
  collect(t.sub(), out);
}

[[noreturn]] void unbound(Ident x) {
  fail(ErrorCode::kScope, "variable " + x.string() + " is not bound");
}

}  // namespace

VarSet free_vars(const Term& t) {
  VarSet out;
  collect(t, out);
  return out;
}

VarSet free_vars(const Type& ty) {
  VarSet out;
  collect(ty, out);
  return out;
}

VarSet free_vars(const Context& ctx) {
  VarSet out;
  for (const auto& [name, ty] : ctx) out.insert(name);
  return out;
}

VarSet free_vars(const Substitution& sub) {
  VarSet out;
  collect(sub, out);
  return out;
}

VarSet var_union(const Term& t, const Type& ty) {
  VarSet out;
  collect(t, out);
  collect(ty, out);
  return out;
}

int dim_ctx(const Context& ctx) {
  int d = -1;
  for (const auto& [name, ty] : ctx) d = std::max(d, ty.dim() + 1);
  return d;
}

int dim_term(const Context& ctx, const Term& t) {
  if (t.is_var()) {
    const Type* ty = ctx.find(t.name());
    if (!ty) unbound(t.name());
    return ty->dim() + 1;
  }
  // The type of coh[γ] is the declared type under γ, and the action of a
  // substitution preserves dimension.
  return t.coh().ty().dim() + 1;
}

Type apply_type(const Type& ty, const Substitution& sub) {
  if (ty.is_obj()) return ty;
  return Type::arr(apply_type(ty.base(), sub), apply_term(ty.src(), sub),
                   apply_term(ty.tgt(), sub));
}

Term apply_term(const Term& t, const Substitution& sub) {
  if (t.is_var()) {
    const Term* image = sub.find(t.name());
    if (!image) unbound(t.name());
    return *image;
  }
  return Term::app(t.coh_ptr(), compose(t.sub(), sub));
}

Substitution compose(const Substitution& delta, const Substitution& gamma) {
  std::vector<Substitution::Entry> out;
  out.reserve(delta.size());
  for (const auto& [target, image] : delta)
    out.emplace_back(target, apply_term(image, gamma));
  return Substitution(std::move(out));
}

Substitution identity(const Context& ctx) {
  std::vector<Substitution::Entry> out;
  out.reserve(ctx.size());
  for (const auto& [name, ty] : ctx) out.emplace_back(name, Term::var(name));
  return Substitution(std::move(out));
}

int depth(const Term& t) {
  if (t.is_var()) return 0;
  return 1 + depth(t.sub());
}

int depth(const Substitution& sub) {
  int d = 0;
  for (const auto& [target, image] : sub) d = std::max(d, depth(image));
  return d;
}

int coherence_depth(const Context& ctx, const Type& ty) {
  if (ty.is_obj()) return 0;
  return std::max({coherence_depth(ctx, ty.base()),
                   coherence_depth(ctx, ty.src()),
                   coherence_depth(ctx, ty.tgt())});
}

int coherence_depth(const Context& ctx, const Term& t) {
  if (t.is_var()) {
    const Type* ty = ctx.find(t.name());
    if (!ty) unbound(t.name());
    return coherence_depth(ctx, *ty);
  }
  const Coherence& c = t.coh();
  return std::max(coherence_depth(c.ctx(), c.ty()) + 1,
                  coherence_depth(ctx, t.sub()));
}

int coherence_depth(const Context& ctx, const Substitution& sub) {
  int d = 0;
  for (const auto& [target, image] : sub)
    d = std::max(d, coherence_depth(ctx, image));
  return d;
}

}  // namespace catt
