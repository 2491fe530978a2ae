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

// Prints one PASS/FAIL line per acceptance criterion. Exits non-zero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "properties.h"

namespace {

using catt::properties::Report;

// Budgets and sample sizes.
constexpr double kCorpusSeconds = 1.0;
constexpr double kEquivalenceSeconds = 60.0;
constexpr int kEquivalenceCells = 6;
constexpr int kEquivalenceDim = 2;
constexpr std::size_t kLawTriples = 10000;
constexpr std::size_t kDepthPairs = 1000;
constexpr int kBoundaryCells = 7;
constexpr int kBoundaryDim = 3;
constexpr std::size_t kBoundaryRandom = 1000;
constexpr int kClosedDepth = 2;
constexpr std::size_t kImplicitPerCoherence = 25;
constexpr std::uint32_t kSeed = 20261014;

int failures = 0;

void criterion(int n, const char* what, const std::function<Report()>& check,
               double budget_seconds = 0) {
  auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    r = check();
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  bool in_time = budget_seconds <= 0 || secs < budget_seconds;
  bool ok = r.ok() && r.cases > 0 && in_time;
  failures += !ok;
  std::printf("%s %d: %s [%zu cases, %.3fs", ok ? "PASS" : "FAIL", n, what,
              r.cases, secs);
  if (budget_seconds > 0) std::printf(" < %.0fs", budget_seconds);
  if (!r.note.empty()) std::printf("; %s", r.note.c_str());
  std::printf("]\n");
  if (!in_time) std::printf("    over the time budget\n");
  for (const std::string& f : r.failures) std::printf("    %s\n", f.c_str());
}

Report at_least(Report r, std::size_t n, const char* what) {
  if (r.cases < n)
    r.fail("only " + std::to_string(r.cases) + " " + what + ", need " +
           std::to_string(n));
  return r;
}

}  // namespace

int main() {
  using namespace catt::properties;
  criterion(1, "corpus parses, elaborates and checks", corpus,
            kCorpusSeconds);
  criterion(2, "negative corpus is rejected", negative_corpus);
  criterion(
      3, "ps-checker three-way agreement (<= 6 cells, dim <= 2)",
      [] { return ps_equivalence(kEquivalenceCells, kEquivalenceDim); },
      kEquivalenceSeconds);
  criterion(4, "substitution calculus laws", [] {
    return at_least(substitution_laws(kSeed, kLawTriples), kLawTriples,
                    "triples");
  });
  criterion(5, "coherence depth bounds", [] {
    return at_least(coherence_depth_bounds(kSeed + 1, kDepthPairs),
                    kDepthPairs, "pairs");
  });
  criterion(6, "boundaries of ps-contexts", [] {
    return boundaries(kBoundaryCells, kBoundaryDim, kSeed + 2,
                      kBoundaryRandom);
  });
  criterion(7, "familial representability round-trip", familial_round_trip);
  criterion(8, "no closed terms of depth <= 2",
            [] { return closed_terms(kClosedDepth); });
  criterion(9, "implicit and explicit arguments agree", [] {
    return implicit_explicit(kSeed + 3, kImplicitPerCoherence);
  });
  return failures == 0 ? 0 : 1;
}
