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

#include "catt/kernel.h"

#include <stdexcept>
#include <string>

#include "catt/calculus.h"
#include "catt/error.h"

namespace catt {
namespace {

// "{y, f}", ordered as in `ctx`.
std::string show_vars(const VarSet& vars, const Context& ctx) {
  std::string out = "{";
  bool first = true;
  auto emit = [&](Ident v) {
    if (!first) out += ", ";
    out += v.string();
    first = false;
  };
  for (const auto& [name, ty] : ctx)
    if (vars.count(name)) emit(name);
  for (Ident v : vars)
    if (!ctx.contains(v)) emit(v);
  return out + "}";
}

VarSet minus(const VarSet& a, const VarSet& b) {
  VarSet out;
  for (Ident v : a)
    if (!b.count(v)) out.insert(v);
  return out;
}

// Var(t : A) against Var(scope). Appends a description of any mismatch to
// `report`.
bool uses_exactly(const Term& t, const Type& base, const Context& scope,
                  const Context& whole, std::string_view side,
                  std::string& report) {
  VarSet used = var_union(t, base);
  VarSet wanted = free_vars(scope);
  VarSet missing = minus(wanted, used);
  VarSet extra = minus(used, wanted);
  if (missing.empty() && extra.empty()) return true;
  report += std::string(side) + " " + pretty(t);
  if (!missing.empty()) report += " leaves " + show_vars(missing, whole) +
                                  " unused";
  if (!missing.empty() && !extra.empty()) report += " and";
  if (!extra.empty()) report += " uses " + show_vars(extra, whole) +
                                " outside " + pretty(scope);
  report += "; ";
  return false;
}

// Premise `scope ⊢ t : base` of the op rule.
bool checks_in(const Environment& env, const Context& scope, const Term& t,
               const Type& base, std::string_view side, std::string& report) {
  try {
    check_type(env, scope, base);
    Type actual = infer_term(env, scope, t);
    if (struct_eq(actual, base)) return true;
    report += std::string(side) + " " + pretty(t) + " has type " +
              pretty(actual) + " in " + pretty(scope) + "; ";
  } catch (const CattError& e) {
    report += std::string(side) + " " + pretty(t) +
              " does not check in " + pretty(scope) + " (" + e.message() +
              "); ";
  }
  return false;
}

struct CohVerdict {
  CohKind kind;
  PsContext ps;
};

CohVerdict decide_coherence(const Environment& env, const Context& ctx,
                            const Type& ty) {
  JudgmentScope scope("op/coh", "coherence declaration");
  check_ctx(env, ctx);
  PsContext ps = check_ps(ctx);
  if (ty.is_obj())
    fail(ErrorCode::kSideCondition,
         "the type of a coherence must be an arrow, not *");
  check_type(env, ctx, ty);

  const Type& base = ty.base();
  const Term& src = ty.src();
  const Term& tgt = ty.tgt();

  std::string coh_report;
  bool coh_ok = uses_exactly(src, base, ctx, ctx, "source", coh_report);
  coh_ok = uses_exactly(tgt, base, ctx, ctx, "target", coh_report) && coh_ok;

  std::string op_report;
  bool op_ok = false;
  if (ps.dim() >= 1) {
    Context lo = source(ps);
    Context hi = target(ps);
    bool lo_ok = checks_in(env, lo, src, base, "source", op_report);
    lo_ok = uses_exactly(src, base, lo, ctx, "source", op_report) && lo_ok;
    bool hi_ok = checks_in(env, hi, tgt, base, "target", op_report);
    hi_ok = uses_exactly(tgt, base, hi, ctx, "target", op_report) && hi_ok;
    op_ok = lo_ok && hi_ok;
  } else {
    op_report = "not applicable to a 0-dimensional ps-context; ";
  }

  if (coh_ok && op_ok)
    throw std::logic_error("op and coh side conditions both hold for " +
                           pretty(ty));
  if (coh_ok) return {CohKind::kCoh, std::move(ps)};
  if (op_ok) return {CohKind::kOp, std::move(ps)};

  auto trim = [](std::string s) {
    if (s.size() >= 2) s.resize(s.size() - 2);
    return s;
  };
  fail(ErrorCode::kSideCondition,
       "no coherence rule applies to " + pretty(ty) + " over " + pretty(ctx) +
           ": coh rule: " + trim(coh_report) + "; op rule: " +
           trim(op_report));
}

}  // namespace

// ---------------------------------------------------------------------------

Ident decl_name(const Declaration& d) {
  if (const auto* c = std::get_if<CoherenceDecl>(&d)) return c->coh->name();
  return std::get<LetDef>(d).name;
}

const Declaration* Environment::find(Ident name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &decls_[it->second];
}

void Environment::require_fresh(Ident name) const {
  if (contains(name))
    fail(ErrorCode::kDuplicate, name.string() + " is already declared");
}

const CoherenceDecl& Environment::declare_coherence(Ident name,
                                                    const Context& ctx,
                                                    const Type& ty) {
  require_fresh(name);
  for (const auto& [var, var_ty] : ctx)
    if (contains(var))
      fail(ErrorCode::kDuplicate,
           "variable " + var.string() + " shadows a declaration");
  CohVerdict verdict = decide_coherence(*this, ctx, ty);
  auto coh = Coherence::make(name, ctx, ty, verdict.kind,
                             verdict.ps.locally_max());
  std::size_t key = coh->key_hash();
  index_.emplace(name, decls_.size());
  by_key_.emplace(key, decls_.size());
  decls_.push_back(CoherenceDecl{std::move(coh), std::move(verdict.ps)});
  return std::get<CoherenceDecl>(decls_.back());
}

const LetDef& Environment::declare_let(Ident name, const Context& ctx,
                                       const Term& body) {
  require_fresh(name);
  for (const auto& [var, var_ty] : ctx)
    if (contains(var))
      fail(ErrorCode::kDuplicate,
           "variable " + var.string() + " shadows a declaration");
  check_ctx(*this, ctx);
  Type ty = infer_term(*this, ctx, body);
  index_.emplace(name, decls_.size());
  decls_.push_back(LetDef{name, ctx, body, std::move(ty)});
  return std::get<LetDef>(decls_.back());
}

bool Environment::verified(const Coherence& coh) const {
  auto [lo, hi] = by_key_.equal_range(coh.key_hash());
  for (auto it = lo; it != hi; ++it) {
    const auto& known = std::get<CoherenceDecl>(decls_[it->second]).coh;
    if (same_coherence(*known, coh)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

void check_ctx(const Environment& env, const Context& ctx) {
  JudgmentScope scope("ce", "context extension");
  Context prefix;
  for (const auto& [name, ty] : ctx) {
    if (prefix.contains(name))
      fail(ErrorCode::kDuplicate,
           "variable " + name.string() + " is declared twice");
    check_type(env, prefix, ty);
    prefix.push_back(name, ty);
  }
}

void check_type(const Environment& env, const Context& ctx, const Type& ty) {
  if (ty.is_obj()) return;
  JudgmentScope scope("Hom-intro", "arrow type");
  check_type(env, ctx, ty.base());
  auto endpoint = [&](const Term& t, std::string_view which) {
    Type actual = infer_term(env, ctx, t);
    if (!struct_eq(actual, ty.base()))
      fail(ErrorCode::kTypeMismatch,
           std::string("the ") + std::string(which) + " " + pretty(t) +
               " has type " + pretty(actual) + ", expected " +
               pretty(ty.base()));
  };
  endpoint(ty.src(), "source");
  endpoint(ty.tgt(), "target");
}

Type infer_term(const Environment& env, const Context& ctx, const Term& t) {
  if (t.is_var()) {
    const Type* ty = ctx.find(t.name());
    if (!ty)
      fail(ErrorCode::kScope,
           "variable " + t.name().string() + " is not bound");
    return *ty;
  }
  JudgmentScope scope("op/coh", "coherence application");
  const Coherence& c = t.coh();
  if (!env.verified(c)) {
    CohKind kind = decide_coherence(env, c.ctx(), c.ty()).kind;
    if (kind != c.kind())
      fail(ErrorCode::kSideCondition,
           "coherence " + c.name().string() + " is derivable by the " +
               std::string(kind_name(kind)) + " rule, not the " +
               std::string(kind_name(c.kind())) + " rule");
  }
  check_sub(env, ctx, t.sub(), c.ctx());
  return apply_type(c.ty(), t.sub());
}

void check_sub(const Environment& env, const Context& ctx,
               const Substitution& sub, const Context& target) {
  JudgmentScope scope("se", "substitution extension");
  if (sub.size() != target.size())
    fail(ErrorCode::kArity, "substitution has " + std::to_string(sub.size()) +
                                " entries but its target context has " +
                                std::to_string(target.size()) + " variables");
  Substitution prefix;
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const auto& [var, var_ty] = target[i];
    const auto& [entry, image] = sub[i];
    if (entry != var)
      fail(ErrorCode::kArity, "substitution entry " + std::to_string(i + 1) +
                                  " is for " + entry.string() +
                                  ", expected " + var.string());
    Type expected = apply_type(var_ty, prefix);
    Type actual = infer_term(env, ctx, image);
    if (!struct_eq(actual, expected))
      fail(ErrorCode::kTypeMismatch,
           "the image " + pretty(image) + " of " + var.string() +
               " has type " + pretty(actual) + ", expected " +
               pretty(expected));
    prefix.push_back(entry, image);
  }
}

CohKind check_coh_decl(const Environment& env, const Context& ctx,
                       const Type& ty) {
  return decide_coherence(env, ctx, ty).kind;
}

// ---------------------------------------------------------------------------

Ident disk_var(int i) { return Ident("d" + std::to_string(i)); }

Type disk_type(int n) {
  Type u;
  for (int k = 0; k < n; ++k)
    u = Type::arr(u, Term::var(disk_var(2 * k)),
                  Term::var(disk_var(2 * k + 1)));
  return u;
}

Context sphere_ctx(int n) {
  Context out;
  for (int k = 0; k <= n; ++k) {
    Type u = disk_type(k);
    out.push_back(disk_var(2 * k), u);
    out.push_back(disk_var(2 * k + 1), u);
  }
  return out;
}

Context disk_ctx(int n) {
  Context out = sphere_ctx(n - 1);
  out.push_back(disk_var(2 * n), disk_type(n));
  return out;
}

namespace {

// The substitution towards D^{dim(ty)+1} classifying t : ty.
Substitution encode_typed(const Term& t, const Type& ty) {
  Substitution out;
  if (ty.is_arr()) {
    out = encode_typed(ty.src(), ty.base());
    out.push_back(disk_var(2 * ty.dim() + 1), ty.tgt());
  }
  out.push_back(disk_var(2 * (ty.dim() + 1)), t);
  return out;
}

void require_disk_names(const Substitution& sub, std::string_view what) {
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (sub[i].first != disk_var(static_cast<int>(i)))
      fail(ErrorCode::kArity, "substitution does not target " +
                                  std::string(what) + ": entry " +
                                  std::to_string(i + 1) + " is for " +
                                  sub[i].first.string());
}

}  // namespace

Substitution encode_type(const Environment& env, const Context& ctx,
                         const Type& ty) {
  check_type(env, ctx, ty);
  if (ty.is_obj()) return {};
  Substitution out = encode_typed(ty.src(), ty.base());
  out.push_back(disk_var(2 * ty.dim() + 1), ty.tgt());
  return out;
}

Substitution encode_term(const Environment& env, const Context& ctx,
                         const Term& t) {
  return encode_typed(t, infer_term(env, ctx, t));
}

Type decode_type(const Context& ctx, const Substitution& sub) {
  (void)ctx;
  if (sub.size() % 2 != 0)
    fail(ErrorCode::kArity, "a sphere context has an even number of "
                            "variables, got " + std::to_string(sub.size()));
  require_disk_names(sub, "a sphere context");
  return apply_type(disk_type(static_cast<int>(sub.size() / 2)), sub);
}

Term decode_term(const Context& ctx, const Substitution& sub) {
  (void)ctx;
  if (sub.size() % 2 != 1)
    fail(ErrorCode::kArity, "a disk context has an odd number of "
                            "variables, got " + std::to_string(sub.size()));
  require_disk_names(sub, "a disk context");
  return sub[sub.size() - 1].second;
}

}  // namespace catt
