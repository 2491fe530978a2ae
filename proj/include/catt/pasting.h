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

#ifndef CATT_PASTING_H_
#define CATT_PASTING_H_

// Pasting schemes: recognition of ps-contexts, their boundaries, and the
// globular-set view used to compare against the ◁-linearity criterion.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catt/ident.h"
#include "catt/syntax.h"

namespace catt {

enum class PsRule { kPss, kPse, kPsd, kPs };

std::string_view rule_name(PsRule rule);

// One step of a ps derivation: the rule applied and the dangling variable it
// leaves behind.
struct PsStep {
  PsRule rule;
  Ident var;
  Type type;
};

// The globular-sum profile: dimensions of the peaks, and the dimensions at
// which consecutive peaks are glued.
struct DimTable {
  std::vector<int> top;
  std::vector<int> glue;

  friend bool operator==(const DimTable&, const DimTable&) = default;
};

// A context together with its (unique) ps derivation.
class PsContext {
 public:
  const Context& ctx() const { return ctx_; }
  // Geometric dimension: the largest dimension of a variable.
  int dim() const { return dim_; }
  const std::vector<PsStep>& trace() const { return trace_; }
  const std::vector<Ident>& locally_max() const { return locally_max_; }
  const DimTable& table() const { return table_; }

 private:
  friend PsContext check_ps(const Context& ctx);
  PsContext() = default;

  Context ctx_;
  int dim_ = 0;
  std::vector<PsStep> trace_;
  std::vector<Ident> locally_max_;
  DimTable table_;
};

// Runs the ps rules left to right. Throws E04 naming the first entry where
// neither pse nor psd applies.
PsContext check_ps(const Context& ctx);

// i-source and i-target, i > 0 (std::invalid_argument otherwise).
Context src_ctx(const PsContext& ps, int i);
Context tgt_ctx(const PsContext& ps, int i);

// The boundary at dimension dim - 1. Throws E04 on a 0-dimensional scheme,
// whose boundary is empty.
Context source(const PsContext& ps);
Context target(const PsContext& ps);

inline const std::vector<Ident>& locally_max(const PsContext& ps) {
  return ps.locally_max();
}
inline const DimTable& dim_table(const PsContext& ps) { return ps.table(); }

// A finite globular set. Cells are numbered in insertion order; faces of a
// cell must be inserted before it.
class GlobSet {
 public:
  struct Cell {
    std::string name;
    int dim;
    int src;  // -1 for 0-cells
    int tgt;
  };

  // Throws std::invalid_argument if a face is missing, has the wrong
  // dimension, or the globular relations fail.
  int add_cell(std::string name, int dim, int src = -1, int tgt = -1);

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const Cell& operator[](std::size_t i) const { return cells_[i]; }
  const std::vector<Cell>& cells() const { return cells_; }

  std::vector<int> cells_of_dim(int d) const;
  int max_dim() const;
  // Index of the cell called `name`, or -1.
  int find(std::string_view name) const;

 private:
  std::vector<Cell> cells_;
};

// Equality of globular sets whose cells are identified by name.
bool same_cells(const GlobSet& a, const GlobSet& b);

// One cell per variable. Throws E03 if some type is not built from
// variables alone.
GlobSet to_globset(const Context& ctx);

// A square boolean relation over cell indices.
class Relation {
 public:
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}
  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const {
    return bits_[i * n_ + j] != 0;
  }
  void set(std::size_t i, std::size_t j) { bits_[i * n_ + j] = 1; }

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

// Transitive closure of s(x) ◁ x ◁ t(x).
Relation triangle_closure(const GlobSet& g);

// ◁ is irreflexive and total; false on the empty globular set.
bool is_linear(const GlobSet& g);

}  // namespace catt

#endif  // CATT_PASTING_H_
