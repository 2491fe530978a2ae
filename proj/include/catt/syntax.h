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

#ifndef CATT_SYNTAX_H_
#define CATT_SYNTAX_H_

// Object-language syntax: types, terms, contexts, substitutions, and the
// coherence constructors. Values are immutable and share structure.

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catt/ident.h"

namespace catt {

class Coherence;
class Substitution;
class Type;

enum class CohKind { kOp, kCoh };

std::string_view kind_name(CohKind kind);

// A variable, or a coherence applied to a substitution that has one image per
// variable of the coherence's ps-context.
class Term {
 public:
  static Term var(Ident name);
  static Term app(std::shared_ptr<const Coherence> coh, Substitution sub);

  bool is_var() const;
  bool is_app() const { return !is_var(); }

  // Pre: is_var().
  Ident name() const;
  // Pre: is_app().
  const Coherence& coh() const;
  const std::shared_ptr<const Coherence>& coh_ptr() const;
  const Substitution& sub() const;

  // Consistent with struct_eq.
  std::size_t hash() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Obj, or Hom over a base type between two terms of that base.
class Type {
 public:
  Type() = default;  // Obj

  static Type obj() { return Type(); }
  static Type arr(Type base, Term src, Term tgt);

  bool is_obj() const { return arr_ == nullptr; }
  bool is_arr() const { return arr_ != nullptr; }

  // Pre: is_arr().
  const Type& base() const;
  const Term& src() const;
  const Term& tgt() const;

  // dim(Obj) = -1, dim(Hom A t u) = dim(A) + 1.
  int dim() const;

  std::size_t hash() const;

  bool same_node(const Type& other) const { return arr_ == other.arr_; }

 private:
  struct Arr;
  std::shared_ptr<const Arr> arr_;
};

// An ordered list of (target variable, image) pairs.
class Substitution {
 public:
  using Entry = std::pair<Ident, Term>;

  Substitution() = default;
  Substitution(std::initializer_list<Entry> entries) : entries_(entries) {}
  explicit Substitution(std::vector<Entry> entries)
      : entries_(std::move(entries)) {}

  void push_back(Ident target, Term image) {
    entries_.emplace_back(target, std::move(image));
  }
  void pop_back() { entries_.pop_back(); }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // The rightmost entry for `target`, or null.
  const Term* find(Ident target) const;

 private:
  std::vector<Entry> entries_;
};

// An ordered telescope of typed variables.
class Context {
 public:
  using Entry = std::pair<Ident, Type>;

  Context() = default;
  Context(std::initializer_list<Entry> entries) : entries_(entries) {}
  explicit Context(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  void push_back(Ident name, Type type) {
    entries_.emplace_back(name, std::move(type));
  }
  void pop_back() { entries_.pop_back(); }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  const Entry& back() const { return entries_.back(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }

  const Type* find(Ident name) const;
  bool contains(Ident name) const { return find(name) != nullptr; }
  // Position of `name`, or size() when absent.
  std::size_t index_of(Ident name) const;
  Context prefix(std::size_t n) const;
  std::vector<Ident> names() const;

 private:
  std::vector<Entry> entries_;
};

// The identity of a coherence: its ps-context and type under positional
// renaming, and which rule introduced it.
struct CohKey {
  Context ctx;
  Type ty;
  CohKind kind;
};

// A named coherence constructor. Construction only computes the canonical
// key; whether the coherence is derivable is the kernel's business.
class Coherence {
 public:
  // `explicit_args` lists the variables supplied at use sites (the
  // locally-maximal ones); an empty list means every variable is printed.
  static std::shared_ptr<const Coherence> make(Ident name, Context ctx,
                                               Type ty, CohKind kind,
                                               std::vector<Ident> explicit_args);

  Ident name() const { return name_; }
  const Context& ctx() const { return ctx_; }
  const Type& ty() const { return ty_; }
  CohKind kind() const { return key_.kind; }
  const std::vector<Ident>& explicit_args() const { return explicit_args_; }
  const CohKey& key() const { return key_; }
  std::size_t key_hash() const { return key_hash_; }

 private:
  Coherence(Ident name, Context ctx, Type ty, CohKey key,
            std::vector<Ident> explicit_args);

  Ident name_;
  Context ctx_;
  Type ty_;
  CohKey key_;
  std::size_t key_hash_;
  std::vector<Ident> explicit_args_;
};

// Positional variable name v<i>.
Ident canonical_name(std::size_t i);

// Renames the i-th variable to v<i>. Throws E02 when a type mentions an
// undeclared or later variable.
Context canonicalize(const Context& ctx);
// Renames `ty` along with its context.
std::pair<Context, Type> canonicalize(const Context& ctx, const Type& ty);

// Syntactic identity; coherences are compared by key, never by name.
bool struct_eq(const Term& a, const Term& b);
bool struct_eq(const Type& a, const Type& b);
bool struct_eq(const Substitution& a, const Substitution& b);
bool struct_eq(const Context& a, const Context& b);
bool struct_eq(const CohKey& a, const CohKey& b);
bool same_coherence(const Coherence& a, const Coherence& b);

inline bool operator==(const Term& a, const Term& b) { return struct_eq(a, b); }
inline bool operator==(const Type& a, const Type& b) { return struct_eq(a, b); }
inline bool operator==(const Substitution& a, const Substitution& b) {
  return struct_eq(a, b);
}
inline bool operator==(const Context& a, const Context& b) {
  return struct_eq(a, b);
}

// Surface syntax. Coherence applications list only their explicit arguments.
std::string pretty(const Term& t);
std::string pretty(const Type& ty);
std::string pretty(const Context& ctx);
std::string pretty(const Substitution& sub);
// Same, but every coherence application lists its full argument list.
std::string pretty_explicit(const Term& t);
std::string pretty_explicit(const Type& ty);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Type& ty);
std::ostream& operator<<(std::ostream& os, const Context& ctx);
std::ostream& operator<<(std::ostream& os, const Substitution& sub);

}  // namespace catt

template <>
struct std::hash<catt::Term> {
  std::size_t operator()(const catt::Term& t) const noexcept {
    return t.hash();
  }
};

template <>
struct std::hash<catt::Type> {
  std::size_t operator()(const catt::Type& ty) const noexcept {
    return ty.hash();
  }
};

#endif  // CATT_SYNTAX_H_
