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

#ifndef CATT_TESTS_PROPERTIES_H_
#define CATT_TESTS_PROPERTIES_H_

// Property suites shared by the unit tests and the acceptance runner. Each
// returns how many cases it looked at and the first few failures.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace catt::properties {

struct Report {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  // Free-form summary, e.g. counts by category.
  std::string note;

  bool ok() const { return failures.empty(); }
  void fail(std::string what);
};

// The corpus checks into an environment of 13 declarations.
Report corpus();
// Reordered context: E04; projection: E05 naming {y, f}; the negative
// classic examples are not ◁-linear and the positive ones are.
Report negative_corpus();
// is_linear, ps_by_peeling, and check_ps on every ordering agree on every
// globular context with at most max_cells cells of dimension <= max_dim.
Report ps_equivalence(int max_cells, int max_dim);
// Identity, associativity, and functoriality on random derivable data.
Report substitution_laws(std::uint32_t seed, std::size_t triples);
// cd does not grow under substitution; cd(A) <= cd(t) for t : A.
Report coherence_depth_bounds(std::uint32_t seed, std::size_t pairs);
// Boundaries of ps-contexts are ps-contexts of the right dimension.
Report boundaries(int max_cells, int max_dim, std::uint32_t seed,
                  std::size_t random_contexts);
// encode/decode of every type and term in the corpus.
Report familial_round_trip();
// No term of depth <= max_depth is derivable in the empty context.
Report closed_terms(int max_depth);
// Locally maximal and full argument lists elaborate to the same term.
Report implicit_explicit(std::uint32_t seed, std::size_t per_coherence);
// Maps between small ps-contexts are injective; endomorphisms are trivial.
Report pasting_scheme_maps(int max_blocks);

}  // namespace catt::properties

#endif  // CATT_TESTS_PROPERTIES_H_
