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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "catt/kernel.h"
#include "catt/pasting.h"
#include "oracle/generators.h"
#include "oracle/oracle.h"
#include "test_util.h"

namespace catt {
namespace {

using oracle::enum_globular_contexts;

TEST(Enumeration, SmallCases) {
  auto one = enum_globular_contexts(1, 0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(pretty(one[0]), "(v0:*)");
  auto two = enum_globular_contexts(2, 0);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(pretty(two[0]), "(v0:*)");
  EXPECT_EQ(pretty(two[1]), "(v0:*)(v1:*)");
}

TEST(Enumeration, FrozenCounts) {
  // Cross-checked against an independent enumeration script.
  EXPECT_EQ(enum_globular_contexts(3, 1).size(), 10u);
  EXPECT_EQ(enum_globular_contexts(4, 1).size(), 47u);
  EXPECT_EQ(enum_globular_contexts(5, 2).size(), 470u);
  EXPECT_EQ(enum_globular_contexts(6, 2).size(), 4872u);
}

TEST(Enumeration, EveryContextChecks) {
  Environment env;
  for (const Context& c : enum_globular_contexts(5, 2)) {
    EXPECT_NO_THROW(check_ctx(env, c)) << pretty(c);
    EXPECT_TRUE(struct_eq(canonicalize(c), c));
  }
}

TEST(Peeling, Examples) {
  const Environment& env = testing::prelude();
  GlobSet w = to_globset(testing::ctx(env, testing::kGammaW));
  EXPECT_TRUE(oracle::ps_by_peeling(w));
  auto rec = oracle::reconstruct(w);
  ASSERT_TRUE(rec);
  EXPECT_EQ(pretty(*rec), pretty(testing::ctx(env, testing::kGammaW)));

  GlobSet point;
  point.add_cell("x", 0);
  EXPECT_TRUE(oracle::ps_by_peeling(point));
  EXPECT_FALSE(oracle::ps_by_peeling(GlobSet{}));

  for (const auto& ex : oracle::classic_examples())
    EXPECT_EQ(oracle::ps_by_peeling(ex.g), ex.pasting_scheme) << ex.name;
}

TEST(Peeling, ReconstructsTheReorderedContext) {
  const Environment& env = testing::prelude();
  GlobSet g = to_globset(testing::ctx(env, "(x:*)(y:*)(z:*)(f:x->y)(g:y->z)"));
  auto rec = oracle::reconstruct(g);
  ASSERT_TRUE(rec);
  EXPECT_EQ(pretty(*rec), "(x:*)(y:*)(f:x -> y)(z:*)(g:y -> z)");
  EXPECT_EQ(oracle::ps_orderings(g).size(), 1u);
}

TEST(PsContexts, CatalanCounts) {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (int b = 0; b < 6; ++b) {
    auto all = oracle::all_ps_contexts(b);
    EXPECT_EQ(all.size(), catalan[b]);
    for (const Context& c : all) EXPECT_NO_THROW(check_ps(c)) << pretty(c);
  }
}

TEST(PsContexts, RandomOnesCheck) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Context c = oracle::random_ps_context(rng, 1 + i % 9, 1 + i % 4);
    EXPECT_NO_THROW(check_ps(c)) << pretty(c);
    EXPECT_TRUE(oracle::ps_by_peeling(to_globset(c)));
  }
}

TEST(GlobularMaps, Counts) {
  GlobSet d0 = to_globset(disk_ctx(0));
  GlobSet d1 = to_globset(disk_ctx(1));
  GlobSet d2 = to_globset(disk_ctx(2));
  EXPECT_EQ(oracle::globular_maps(d0, d1).size(), 2u);
  EXPECT_EQ(oracle::globular_maps(d1, d1).size(), 1u);
  EXPECT_EQ(oracle::globular_maps(d1, d2).size(), 2u);
  EXPECT_EQ(oracle::globular_maps(d2, d1).size(), 0u);
  EXPECT_EQ(oracle::globular_maps(d1, d0).size(), 0u);
}

TEST(Generators, PoolsHoldDerivableTerms) {
  const Environment& env = testing::prelude();
  std::mt19937 rng(3);
  Context c = testing::ctx(env, "(x:*)(y:*)(f:x->y)");
  oracle::TermPool pool(env, c);
  pool.grow(rng, 200, 3);
  EXPECT_GT(pool.terms().size(), 10u);
  for (const auto& tt : pool.terms())
    EXPECT_TRUE(struct_eq(infer_term(env, c, tt.term), tt.type))
        << pretty(tt.term);
  auto s = oracle::random_sub(pool, testing::ctx(env, "(a:*)(b:*)(h:a->b)"),
                              rng);
  ASSERT_TRUE(s);
}

TEST(Generators, DerivableTermsByDepth) {
  const Environment& env = testing::prelude();
  Context x = testing::ctx(env, "(x:*)");
  auto depth1 = oracle::derivable_terms(env, x, 1);
  ASSERT_EQ(depth1.size(), 2u);  // x and id x
  EXPECT_EQ(pretty(depth1[1].term), "id x");
  EXPECT_TRUE(oracle::derivable_terms(env, Context{}, 3).empty());
}

}  // namespace
}  // namespace catt
