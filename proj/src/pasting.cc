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

#include "catt/pasting.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "catt/calculus.h"
#include "catt/error.h"

namespace catt {

std::string_view rule_name(PsRule rule) {
  switch (rule) {
    case PsRule::kPss: return "pss";
    case PsRule::kPse: return "pse";
    case PsRule::kPsd: return "psd";
    case PsRule::kPs: return "ps";
  }
  return "?";
}

namespace {

[[noreturn]] void not_ps(std::size_t index, Ident name,
                         const std::string& why) {
  fail(ErrorCode::kNotPsContext, "not a ps-context: at entry " +
                                     std::to_string(index + 1) + " (" +
                                     name.string() + "): " + why);
}

}  // namespace

PsContext check_ps(const Context& ctx) {
  JudgmentScope scope("ps", "ps-context recognition");
  if (ctx.empty())
    fail(ErrorCode::kNotPsContext, "the empty context is not a ps-context");

  PsContext ps;
  ps.ctx_ = ctx;
  ps.dim_ = dim_ctx(ctx);
  std::vector<PsStep>& trace = ps.trace_;

  const auto& [first, first_ty] = ctx[0];
  if (!first_ty.is_obj())
    not_ps(0, first, "a ps-context starts with an object (rule pss)");
  trace.push_back({PsRule::kPss, first, first_ty});

  std::unordered_set<Ident> seen{first};
  Ident dangling = first;
  Type dangling_ty = first_ty;

  auto descend = [&](std::size_t index, Ident at) {
    // psd: from f : Hom A x y to y : A.
    if (!dangling_ty.tgt().is_var())
      not_ps(index, at,
             "the target of the dangling variable " + dangling.string() +
                 " is not a variable");
    dangling = dangling_ty.tgt().name();
    dangling_ty = dangling_ty.base();
    trace.push_back({PsRule::kPsd, dangling, dangling_ty});
  };

  for (std::size_t k = 1; k < ctx.size(); k += 2) {
    const auto& [y, y_ty] = ctx[k];
    if (k + 1 == ctx.size())
      not_ps(k, y, "no arrow follows it to extend the scheme");
    const auto& [f, f_ty] = ctx[k + 1];

    while (dangling_ty.dim() > y_ty.dim()) descend(k, y);

    bool extends = dangling_ty.dim() == y_ty.dim() &&
                   struct_eq(y_ty, dangling_ty) && f_ty.is_arr() &&
                   struct_eq(f_ty.base(), y_ty) && f_ty.src().is_var() &&
                   f_ty.src().name() == dangling && f_ty.tgt().is_var() &&
                   f_ty.tgt().name() == y;
    if (!extends) {
      not_ps(k, y,
             "neither pse nor psd applies (dangling variable " +
                 dangling.string() + " : " + pretty(dangling_ty) +
                 "; expected " + y.string() + " : " + pretty(dangling_ty) +
                 " followed by an arrow " + dangling.string() + " -> " +
                 y.string() + ")");
    }
    if (seen.count(y) || seen.count(f) || y == f)
      not_ps(k, y, "variables introduced by pse must be fresh");
    seen.insert(y);
    seen.insert(f);
    dangling = f;
    dangling_ty = f_ty;
    trace.push_back({PsRule::kPse, f, f_ty});
  }
  while (dangling_ty.is_arr()) descend(ctx.size() - 1, ctx.back().first);
  trace.push_back({PsRule::kPs, dangling, dangling_ty});

  // Peaks: a pss or pse immediately followed by a descent or the final ps.
  for (std::size_t s = 0; s + 1 < trace.size(); ++s) {
    PsRule here = trace[s].rule;
    PsRule next = trace[s + 1].rule;
    if ((here == PsRule::kPss || here == PsRule::kPse) &&
        (next == PsRule::kPsd || next == PsRule::kPs)) {
      ps.locally_max_.push_back(trace[s].var);
      ps.table_.top.push_back(trace[s].type.dim() + 1);
    }
    // The lowest point between two peaks is where the next pse starts.
    if (here == PsRule::kPsd && next == PsRule::kPse)
      ps.table_.glue.push_back(trace[s].type.dim() + 1);
  }
  return ps;
}

namespace {

// Both boundaries share one recursion over the (y, f) blocks following the
// initial object. i = 0 is allowed here: it yields the first object for the
// source and the last object for the target.
Context boundary(const PsContext& ps, int i, bool plus) {
  const Context& ctx = ps.ctx();
  Context out;
  out.push_back(ctx[0].first, ctx[0].second);
  for (std::size_t k = 1; k + 1 < ctx.size(); k += 2) {
    const auto& [y, y_ty] = ctx[k];
    const auto& [f, f_ty] = ctx[k + 1];
    int d = y_ty.dim();
    if (!plus) {
      if (d >= i - 1) continue;
    } else {
      if (d >= i) continue;
      if (d == i - 1) {
        out.pop_back();
        out.push_back(y, y_ty);
        continue;
      }
    }
    out.push_back(y, y_ty);
    out.push_back(f, f_ty);
  }
  return out;
}

void require_positive(int i) {
  if (i <= 0)
    throw std::invalid_argument("boundary index must be positive, got " +
                                std::to_string(i));
}

void require_boundary(const PsContext& ps) {
  if (ps.dim() < 1)
    fail(ErrorCode::kNotPsContext,
         "a 0-dimensional pasting scheme has an empty boundary");
}

}  // namespace

Context src_ctx(const PsContext& ps, int i) {
  require_positive(i);
  return boundary(ps, i, false);
}

Context tgt_ctx(const PsContext& ps, int i) {
  require_positive(i);
  return boundary(ps, i, true);
}

Context source(const PsContext& ps) {
  require_boundary(ps);
  return boundary(ps, ps.dim() - 1, false);
}

Context target(const PsContext& ps) {
  require_boundary(ps);
  return boundary(ps, ps.dim() - 1, true);
}

// ---------------------------------------------------------------------------

int GlobSet::add_cell(std::string name, int dim, int src, int tgt) {
  int n = static_cast<int>(cells_.size());
  if (dim < 0) throw std::invalid_argument("negative cell dimension");
  if (dim == 0) {
    if (src != -1 || tgt != -1)
      throw std::invalid_argument("0-cell " + name + " has faces");
  } else {
    if (src < 0 || src >= n || tgt < 0 || tgt >= n)
      throw std::invalid_argument("cell " + name + " has a missing face");
    const Cell& s = cells_[src];
    const Cell& t = cells_[tgt];
    if (s.dim != dim - 1 || t.dim != dim - 1)
      throw std::invalid_argument("faces of " + name +
                                  " have the wrong dimension");
    if (dim >= 2 && (s.src != t.src || s.tgt != t.tgt))
      throw std::invalid_argument("faces of " + name + " are not parallel");
  }
  cells_.push_back({std::move(name), dim, src, tgt});
  return n;
}

std::vector<int> GlobSet::cells_of_dim(int d) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dim == d) out.push_back(static_cast<int>(i));
  return out;
}

int GlobSet::max_dim() const {
  int d = -1;
  for (const Cell& c : cells_) d = std::max(d, c.dim);
  return d;
}

int GlobSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].name == name) return static_cast<int>(i);
  return -1;
}

bool same_cells(const GlobSet& a, const GlobSet& b) {
  if (a.size() != b.size()) return false;
  auto face = [](const GlobSet& g, int i) -> std::string {
    return i < 0 ? std::string() : g[i].name;
  };
  for (const GlobSet::Cell& c : a.cells()) {
    int j = b.find(c.name);
    if (j < 0) return false;
    const GlobSet::Cell& d = b[j];
    int i = a.find(c.name);
    if (c.dim != d.dim || face(a, a[i].src) != face(b, d.src) ||
        face(a, a[i].tgt) != face(b, d.tgt))
      return false;
  }
  return true;
}

GlobSet to_globset(const Context& ctx) {
  GlobSet g;
  std::unordered_map<Ident, int> index;
  for (const auto& [name, ty] : ctx) {
    if (ty.is_obj()) {
      index[name] = g.add_cell(name.string(), 0);
      continue;
    }
    if (!ty.src().is_var() || !ty.tgt().is_var())
      fail(ErrorCode::kTypeMismatch,
           "non-globular context: the type of " + name.string() +
               " is not built from variables");
    auto s = index.find(ty.src().name());
    auto t = index.find(ty.tgt().name());
    if (s == index.end() || t == index.end())
      fail(ErrorCode::kScope,
           "the type of " + name.string() + " mentions an unbound variable");
    try {
      index[name] = g.add_cell(name.string(), ty.dim() + 1, s->second,
                               t->second);
    } catch (const std::invalid_argument& e) {
      fail(ErrorCode::kTypeMismatch,
           std::string("non-globular context: ") + e.what());
    }
  }
  return g;
}

Relation triangle_closure(const GlobSet& g) {
  std::size_t n = g.size();
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (g[i].dim == 0) continue;
    r.set(g[i].src, i);
    r.set(i, g[i].tgt);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (r(k, j)) r.set(i, j);
  return r;
}

bool is_linear(const GlobSet& g) {
  if (g.empty()) return false;
  Relation r = triangle_closure(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (r(i, i)) return false;
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (r(i, j) == r(j, i)) return false;
  }
  return true;
}

}  // namespace catt
