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

#include "catt/syntax.h"

#include <optional>
#include <sstream>
#include <unordered_map>

#include "catt/error.h"

namespace catt {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

constexpr std::size_t kObjHash = 0x2545f4914f6cdd1dULL;
constexpr std::size_t kVarSeed = 0x61c8864680b583ebULL;

}  // namespace

std::string_view kind_name(CohKind kind) {
  return kind == CohKind::kOp ? "op" : "coh";
}

struct Term::Node {
  std::optional<Ident> var;
  std::shared_ptr<const Coherence> coh;
  Substitution sub;
  std::size_t hash = 0;
};

struct Type::Arr {
  Type base;
  Term src;
  Term tgt;
  int dim;
  std::size_t hash;
};

Term Term::var(Ident name) {
  auto node = std::make_shared<Node>();
  node->var = name;
  node->hash = mix(kVarSeed, name.hash());
  return Term(std::move(node));
}

Term Term::app(std::shared_ptr<const Coherence> coh, Substitution sub) {
  auto node = std::make_shared<Node>();
  std::size_t h = coh->key_hash();
  for (const auto& [target, image] : sub) h = mix(h, image.hash());
  node->coh = std::move(coh);
  node->sub = std::move(sub);
  node->hash = h;
  return Term(std::move(node));
}

bool Term::is_var() const { return node_->var.has_value(); }
Ident Term::name() const { return *node_->var; }
const Coherence& Term::coh() const { return *node_->coh; }
const std::shared_ptr<const Coherence>& Term::coh_ptr() const {
  return node_->coh;
}
const Substitution& Term::sub() const { return node_->sub; }
std::size_t Term::hash() const { return node_->hash; }

Type Type::arr(Type base, Term src, Term tgt) {
  Type ty;
  int d = base.dim() + 1;
  std::size_t h = mix(mix(mix(kObjHash + 1, base.hash()), src.hash()),
                      tgt.hash());
  ty.arr_ = std::make_shared<const Arr>(
      Arr{std::move(base), std::move(src), std::move(tgt), d, h});
  return ty;
}

const Type& Type::base() const { return arr_->base; }
const Term& Type::src() const { return arr_->src; }
const Term& Type::tgt() const { return arr_->tgt; }
int Type::dim() const { return arr_ ? arr_->dim : -1; }
std::size_t Type::hash() const { return arr_ ? arr_->hash : kObjHash; }

const Term* Substitution::find(Ident target) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->first == target) return &it->second;
  return nullptr;
}

const Type* Context::find(Ident name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
    if (it->first == name) return &it->second;
  return nullptr;
}

std::size_t Context::index_of(Ident name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].first == name) return i;
  return entries_.size();
}

Context Context::prefix(std::size_t n) const {
  return Context(std::vector<Entry>(entries_.begin(), entries_.begin() + n));
}

std::vector<Ident> Context::names() const {
  std::vector<Ident> out;
  out.reserve(entries_.size());
  for (const auto& [name, ty] : entries_) out.push_back(name);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical renaming.

namespace {

using Renaming = std::unordered_map<Ident, Ident>;

Term rename(const Term& t, const Renaming& rho);

Type rename(const Type& ty, const Renaming& rho) {
  if (ty.is_obj()) return ty;
  return Type::arr(rename(ty.base(), rho), rename(ty.src(), rho),
                   rename(ty.tgt(), rho));
}

Term rename(const Term& t, const Renaming& rho) {
  if (t.is_var()) {
    auto it = rho.find(t.name());
    if (it == rho.end())
      fail(ErrorCode::kScope,
           "variable " + t.name().string() + " is not in scope");
    return Term::var(it->second);
  }
  Substitution sub;
  for (const auto& [target, image] : t.sub())
    sub.push_back(target, rename(image, rho));
  return Term::app(t.coh_ptr(), std::move(sub));
}

Context canonicalize_into(const Context& ctx, Renaming& rho) {
  Context out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto& [name, ty] = ctx[i];
    Ident fresh = canonical_name(i);
    out.push_back(fresh, rename(ty, rho));
    rho.insert_or_assign(name, fresh);
  }
  return out;
}

std::size_t key_hash_of(const CohKey& key) {
  std::size_t h = key.kind == CohKind::kOp ? 0x51 : 0x52;
  for (const auto& [name, ty] : key.ctx) h = mix(h, ty.hash());
  return mix(h, key.ty.hash());
}

}  // namespace

Ident canonical_name(std::size_t i) {
  static const std::vector<Ident> small = [] {
    std::vector<Ident> v;
    for (int k = 0; k < 64; ++k) v.emplace_back("v" + std::to_string(k));
    return v;
  }();
  if (i < small.size()) return small[i];
  return Ident("v" + std::to_string(i));
}

Context canonicalize(const Context& ctx) {
  Renaming rho;
  return canonicalize_into(ctx, rho);
}

std::pair<Context, Type> canonicalize(const Context& ctx, const Type& ty) {
  Renaming rho;
  Context c = canonicalize_into(ctx, rho);
  return {std::move(c), rename(ty, rho)};
}

Coherence::Coherence(Ident name, Context ctx, Type ty, CohKey key,
                     std::vector<Ident> explicit_args)
    : name_(name),
      ctx_(std::move(ctx)),
      ty_(std::move(ty)),
      key_(std::move(key)),
      key_hash_(key_hash_of(key_)),
      explicit_args_(std::move(explicit_args)) {}

std::shared_ptr<const Coherence> Coherence::make(
    Ident name, Context ctx, Type ty, CohKind kind,
    std::vector<Ident> explicit_args) {
  auto [cctx, cty] = canonicalize(ctx, ty);
  CohKey key{std::move(cctx), std::move(cty), kind};
  return std::shared_ptr<const Coherence>(
      new Coherence(name, std::move(ctx), std::move(ty), std::move(key),
                    std::move(explicit_args)));
}

// ---------------------------------------------------------------------------
// Structural equality.

bool same_coherence(const Coherence& a, const Coherence& b) {
  if (&a == &b) return true;
  if (a.key_hash() != b.key_hash()) return false;
  return struct_eq(a.key(), b.key());
}

bool struct_eq(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  if (a.hash() != b.hash()) return false;
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.name() == b.name();
  if (!same_coherence(a.coh(), b.coh())) return false;
  const Substitution& sa = a.sub();
  const Substitution& sb = b.sub();
  if (sa.size() != sb.size()) return false;
  // Target names belong to the coherence's presentation; only images count.
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (!struct_eq(sa[i].second, sb[i].second)) return false;
  return true;
}

bool struct_eq(const Type& a, const Type& b) {
  if (a.same_node(b)) return true;
  if (a.hash() != b.hash() || a.is_obj() != b.is_obj()) return false;
  return struct_eq(a.base(), b.base()) && struct_eq(a.src(), b.src()) &&
         struct_eq(a.tgt(), b.tgt());
}

bool struct_eq(const Substitution& a, const Substitution& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first) return false;
    if (!struct_eq(a[i].second, b[i].second)) return false;
  }
  return true;
}

bool struct_eq(const Context& a, const Context& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first) return false;
    if (!struct_eq(a[i].second, b[i].second)) return false;
  }
  return true;
}

bool struct_eq(const CohKey& a, const CohKey& b) {
  return a.kind == b.kind && struct_eq(a.ctx, b.ctx) && struct_eq(a.ty, b.ty);
}

// ---------------------------------------------------------------------------
// Printing.

namespace {

void print_term(std::ostream& os, const Term& t, bool all_args, bool atom);

void print_type(std::ostream& os, const Type& ty, bool all_args) {
  if (ty.is_obj()) {
    os << '*';
    return;
  }
  print_term(os, ty.src(), all_args, false);
  os << " -> ";
  print_term(os, ty.tgt(), all_args, false);
}

void print_term(std::ostream& os, const Term& t, bool all_args, bool atom) {
  if (t.is_var()) {
    os << t.name();
    return;
  }
  const Coherence& c = t.coh();
  if (atom) os << '(';
  os << c.name();
  bool printed = false;
  if (!all_args && !c.explicit_args().empty()) {
    std::vector<const Term*> args;
    for (Ident v : c.explicit_args()) args.push_back(t.sub().find(v));
    bool complete = true;
    for (const Term* a : args) complete = complete && a != nullptr;
    if (complete) {
      for (const Term* a : args) {
        os << ' ';
        print_term(os, *a, all_args, true);
      }
      printed = true;
    }
  }
  if (!printed) {
    for (const auto& [target, image] : t.sub()) {
      os << ' ';
      print_term(os, image, all_args, true);
    }
  }
  if (atom) os << ')';
}

template <typename F>
std::string to_string(F&& f) {
  std::ostringstream os;
  f(os);
  return os.str();
}

}  // namespace

std::string pretty(const Term& t) {
  return to_string([&](std::ostream& os) { print_term(os, t, false, false); });
}

std::string pretty(const Type& ty) {
  return to_string([&](std::ostream& os) { print_type(os, ty, false); });
}

std::string pretty_explicit(const Term& t) {
  return to_string([&](std::ostream& os) { print_term(os, t, true, false); });
}

std::string pretty_explicit(const Type& ty) {
  return to_string([&](std::ostream& os) { print_type(os, ty, true); });
}

std::string pretty(const Context& ctx) {
  return to_string([&](std::ostream& os) {
    for (const auto& [name, ty] : ctx) {
      os << '(' << name << ':';
      print_type(os, ty, false);
      os << ')';
    }
  });
}

std::string pretty(const Substitution& sub) {
  return to_string([&](std::ostream& os) {
    os << '[';
    for (std::size_t i = 0; i < sub.size(); ++i) {
      if (i) os << ", ";
      os << sub[i].first << " := ";
      print_term(os, sub[i].second, false, false);
    }
    os << ']';
  });
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  return os << pretty(t);
}
std::ostream& operator<<(std::ostream& os, const Type& ty) {
  return os << pretty(ty);
}
std::ostream& operator<<(std::ostream& os, const Context& ctx) {
  return os << (ctx.empty() ? std::string("()") : pretty(ctx));
}
std::ostream& operator<<(std::ostream& os, const Substitution& sub) {
  return os << pretty(sub);
}

}  // namespace catt
