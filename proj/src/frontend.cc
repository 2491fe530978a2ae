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

// Elaboration: surface syntax to kernel terms, with implicit arguments.

#include <string>
#include <unordered_map>
#include <vector>

#include "catt/calculus.h"
#include "catt/error.h"
#include "catt/frontend.h"
#include "catt/pasting.h"

namespace catt {
namespace {

// First-order matching of declared types of a ps-context against the types
// of the supplied arguments. Patterns are built from variables only.
class Matcher {
 public:
  void bind(Ident var, const Term& image) {
    auto [it, fresh] = bound_.emplace(var, image);
    if (!fresh && !struct_eq(it->second, image))
      fail(ErrorCode::kTypeMismatch,
           "conflicting arguments for " + var.string() + ": " +
               pretty(it->second) + " and " + pretty(image));
  }

  void match(const Type& pattern, const Type& actual) {
    if (pattern.is_obj() != actual.is_obj() ||
        pattern.dim() != actual.dim())
      fail(ErrorCode::kTypeMismatch, "expected an argument of dimension " +
                                         std::to_string(pattern.dim() + 1) +
                                         ", got one of type " +
                                         pretty(actual));
    if (pattern.is_obj()) return;
    match(pattern.base(), actual.base());
    match(pattern.src(), actual.src());
    match(pattern.tgt(), actual.tgt());
  }

  void match(const Term& pattern, const Term& actual) {
    if (pattern.is_var()) {
      bind(pattern.name(), actual);
      return;
    }
    if (!struct_eq(pattern, actual))
      fail(ErrorCode::kTypeMismatch, "cannot match " + pretty(actual) +
                                         " against " + pretty(pattern));
  }

  Substitution result(const Context& theta, Ident head) const {
    Substitution out;
    for (const auto& [var, ty] : theta) {
      auto it = bound_.find(var);
      if (it == bound_.end())
        fail(ErrorCode::kArity, "cannot reconstruct the argument " +
                                    var.string() + " of " + head.string());
      out.push_back(var, it->second);
    }
    return out;
  }

 private:
  std::unordered_map<Ident, Term> bound_;
};

Substitution reconstruct(const Environment& env, const Context& ctx,
                         Ident head, const Context& theta,
                         const std::vector<Ident>& loc_max,
                         const std::vector<Term>& args) {
  JudgmentScope scope("implicit", "argument reconstruction");
  Matcher m;
  for (std::size_t i = 0; i < args.size(); ++i) {
    m.bind(loc_max[i], args[i]);
    m.match(*theta.find(loc_max[i]), infer_term(env, ctx, args[i]));
  }
  return m.result(theta, head);
}

}  // namespace

Type infer_arrow_base(const Environment& env, const Context& ctx,
                      const Term& src, const Term& tgt) {
  Type a = infer_term(env, ctx, src);
  Type b = infer_term(env, ctx, tgt);
  if (!struct_eq(a, b))
    fail(ErrorCode::kTypeMismatch, "the endpoints of " + pretty(src) +
                                       " -> " + pretty(tgt) +
                                       " have different types " + pretty(a) +
                                       " and " + pretty(b));
  return a;
}

Term elaborate_app(const Environment& env, const Context& ctx, Ident head,
                   const std::vector<Term>& args) {
  const Declaration* decl = env.find(head);
  if (!decl) fail(ErrorCode::kScope, "unknown identifier " + head.string());
  const auto* coh = std::get_if<CoherenceDecl>(decl);
  const auto* let = std::get_if<LetDef>(decl);
  const Context& theta = coh ? coh->coh->ctx() : let->ctx;

  Substitution sub;
  if (args.size() == theta.size()) {
    for (std::size_t i = 0; i < args.size(); ++i)
      sub.push_back(theta[i].first, args[i]);
  } else {
    std::vector<Ident> loc_max;
    if (coh) {
      loc_max = coh->ps.locally_max();
    } else {
      try {
        loc_max = check_ps(theta).locally_max();
      } catch (const CattError&) {
        fail(ErrorCode::kArity,
             head.string() + " is not defined over a ps-context, so it "
                             "takes all " + std::to_string(theta.size()) +
                 " arguments, got " + std::to_string(args.size()));
      }
    }
    if (args.size() != loc_max.size())
      fail(ErrorCode::kArity,
           head.string() + " takes " + std::to_string(theta.size()) +
               " arguments, or its " + std::to_string(loc_max.size()) +
               " locally maximal ones, got " + std::to_string(args.size()));
    sub = reconstruct(env, ctx, head, theta, loc_max, args);
  }
  check_sub(env, ctx, sub, theta);
  if (coh) return Term::app(coh->coh, std::move(sub));
  return apply_term(let->body, sub);
}

Term elaborate_term(const Environment& env, const Context& ctx,
                    const SurfaceTerm& t) {
  if (t.args.empty() && ctx.contains(t.head)) return Term::var(t.head);
  if (ctx.contains(t.head))
    fail(ErrorCode::kArity,
         "variable " + t.head.string() + " cannot be applied to arguments");
  if (!env.contains(t.head))
    fail(ErrorCode::kScope, "unknown identifier " + t.head.string());
  std::vector<Term> args;
  args.reserve(t.args.size());
  for (const SurfaceTerm& a : t.args)
    args.push_back(elaborate_term(env, ctx, a));
  return elaborate_app(env, ctx, t.head, args);
}

Type elaborate_type(const Environment& env, const Context& ctx,
                    const SurfaceType& ty) {
  if (!ty.arrow) return Type::obj();
  Term src = elaborate_term(env, ctx, ty.arrow->first);
  Term tgt = elaborate_term(env, ctx, ty.arrow->second);
  Type base = infer_arrow_base(env, ctx, src, tgt);
  return Type::arr(std::move(base), std::move(src), std::move(tgt));
}

Context elaborate_telescope(
    const Environment& env,
    const std::vector<std::pair<Ident, SurfaceType>>& telescope) {
  Context out;
  for (const auto& [var, sty] : telescope) {
    if (out.contains(var))
      fail(ErrorCode::kDuplicate,
           "variable " + var.string() + " is declared twice");
    if (env.contains(var))
      fail(ErrorCode::kDuplicate,
           "variable " + var.string() + " shadows a declaration");
    Type ty = elaborate_type(env, out, sty);
    out.push_back(var, std::move(ty));
  }
  return out;
}

const Declaration& process_decl(Environment& env, const SurfaceDecl& d) {
  try {
    if (env.contains(d.name))
      fail(ErrorCode::kDuplicate, d.name.string() + " is already declared");
    Context ctx = elaborate_telescope(env, d.telescope);
    if (d.kind == DeclKind::kCoh) {
      Type ty = elaborate_type(env, ctx, std::get<SurfaceType>(d.rhs));
      env.declare_coherence(d.name, ctx, ty);
    } else {
      Term body = elaborate_term(env, ctx, std::get<SurfaceTerm>(d.rhs));
      env.declare_let(d.name, ctx, body);
    }
  } catch (CattError& e) {
    if (!e.loc()) e.set_loc(d.loc);
    throw;
  }
  return env.declarations().back();
}

}  // namespace catt
