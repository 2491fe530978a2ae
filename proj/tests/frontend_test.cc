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

#include <string>

#include "catt/calculus.h"
#include "catt/error.h"
#include "catt/frontend.h"
#include "test_util.h"

namespace catt {
namespace {

using testing::ctx;
using testing::prelude;
using testing::term;

Term v(const char* name) { return Term::var(Ident(name)); }
Ident id(const char* name) { return Ident(name); }

CattError error_of(std::string_view text) {
  try {
    testing::load_text(text);
  } catch (const CattError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return CattError(ErrorCode::kSyntax, "none");
}

TEST(Parse, Coherence) {
  auto ds = parse("coh id (x:*) : x -> x");
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].kind, DeclKind::kCoh);
  EXPECT_EQ(ds[0].name, id("id"));
  ASSERT_EQ(ds[0].telescope.size(), 1u);
  EXPECT_FALSE(ds[0].telescope[0].second.arrow);
  const auto& ty = std::get<SurfaceType>(ds[0].rhs);
  ASSERT_TRUE(ty.arrow);
  EXPECT_EQ(ty.arrow->first.head, id("x"));
}

TEST(Parse, Let) {
  auto ds = parse("let sq (x:*)(f:x->x) = comp f f");
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].kind, DeclKind::kLet);
  EXPECT_EQ(ds[0].telescope.size(), 2u);
  const auto& body = std::get<SurfaceTerm>(ds[0].rhs);
  EXPECT_EQ(body.head, id("comp"));
  EXPECT_EQ(body.args.size(), 2u);
}

TEST(Parse, IncompleteArrowFailsAtEndOfInput) {
  try {
    parse("coh bad (x:*) : x ->");
    FAIL();
  } catch (const CattError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntax);
    ASSERT_TRUE(e.loc());
    EXPECT_EQ(e.loc()->line, 1);
    EXPECT_EQ(e.loc()->col, 21);
    EXPECT_NE(e.message().find("end of input"), std::string::npos);
  }
}

TEST(Parse, OtherSyntaxErrors) {
  for (const char* bad : {"coh", "coh x", "coh x (y) : *", "let x = ",
                          "coh x : * ]", "foo", "let x = (a b", "coh coh : *",
                          "let x = (f a) b"}) {
    try {
      parse(bad);
      ADD_FAILURE() << bad;
    } catch (const CattError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSyntax) << bad;
      EXPECT_TRUE(e.loc()) << bad;
    }
  }
}

TEST(Lexer, DashesInNamesAndArrows) {
  auto ds = parse("coh unitl- (x:*)(y:*)(f:x->y) : f -> comp (id x) f");
  EXPECT_EQ(ds[0].name, id("unitl-"));
  const auto& f = ds[0].telescope[2].second;
  ASSERT_TRUE(f.arrow);
  EXPECT_EQ(f.arrow->first.head, id("x"));
  EXPECT_EQ(f.arrow->second.head, id("y"));
  auto primes = parse("coh h (f':*) : f'->f'");
  EXPECT_EQ(primes[0].telescope[0].first, id("f'"));
}

TEST(Lexer, CommentsAndLocations) {
  auto ds = parse("# a comment\n\n  coh id (x:*) : x -> x # trailing\nlet a = b");
  ASSERT_EQ(ds.size(), 2u);
  EXPECT_EQ(ds[0].loc.line, 3);
  EXPECT_EQ(ds[0].loc.col, 3);
  EXPECT_EQ(ds[1].loc.line, 4);
}

TEST(Parse, PrettyRoundTrip) {
  auto ds = parse(testing::read_file(testing::data_path("prelude.catt")));
  ASSERT_EQ(ds.size(), 13u);
  for (const SurfaceDecl& d : ds) {
    auto again = parse(pretty(d));
    ASSERT_EQ(again.size(), 1u);
    EXPECT_TRUE(again[0] == d) << pretty(d);
  }
}

TEST(InferArrowBase, Examples) {
  const Environment& env = prelude();
  Context a = ctx(env, "(x:*)(y:*)");
  EXPECT_TRUE(struct_eq(infer_arrow_base(env, a, v("x"), v("y")),
                        Type::obj()));
  Context b = ctx(env, "(x:*)(y:*)(f:x->y)(g:x->y)");
  EXPECT_TRUE(struct_eq(infer_arrow_base(env, b, v("f"), v("g")),
                        Type::arr(Type::obj(), v("x"), v("y"))));
  Context c = ctx(env, "(x:*)(y:*)(f:x->y)");
  try {
    infer_arrow_base(env, c, v("x"), v("f"));
    FAIL();
  } catch (const CattError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTypeMismatch);
    EXPECT_NE(e.message().find("x -> y"), std::string::npos) << e.message();
  }
}

TEST(ElaborateApp, ImplicitArguments) {
  const Environment& env = prelude();
  Context c = ctx(env, "(x:*)(y:*)(f:x->y)(z:*)(g:y->z)");
  Term t = elaborate_app(env, c, id("comp"), {v("f"), v("g")});
  EXPECT_TRUE(struct_eq(t.sub(), identity(c)));

  Context y = ctx(env, "(y:*)");
  Term i = elaborate_app(env, y, id("id"), {v("y")});
  EXPECT_TRUE(struct_eq(i.sub(), Substitution{{id("x"), v("y")}}));

  Context e = ctx(env, "(x:*)(f:x->x)");
  Term s = elaborate_app(env, e, id("comp"), {v("f"), v("f")});
  EXPECT_TRUE(struct_eq(s.sub(),
                        Substitution{{id("x"), v("x")}, {id("y"), v("x")},
                                     {id("f"), v("f")}, {id("z"), v("x")},
                                     {id("g"), v("f")}}));
}

TEST(ElaborateApp, LetsAreExpanded) {
  const Environment& env = prelude();
  Context e = ctx(env, "(a:*)(h:a->a)");
  EXPECT_TRUE(struct_eq(term(env, e, "sq a h"), term(env, e, "comp h h")));
  // The context of sq is not a ps-context: no implicit arguments.
  try {
    term(env, e, "sq h");
    FAIL();
  } catch (const CattError& err) {
    EXPECT_EQ(err.code(), ErrorCode::kArity);
  }
}

TEST(ElaborateApp, Errors) {
  const Environment& env = prelude();
  Context c = ctx(env, "(x:*)(y:*)(f:x->y)(z:*)(g:y->z)");
  auto code = [&](const char* src) {
    try {
      term(env, c, src);
    } catch (const CattError& e) {
      return e.code();
    }
    return ErrorCode{};
  };
  EXPECT_EQ(code("nope f"), ErrorCode::kScope);
  EXPECT_EQ(code("comp f"), ErrorCode::kArity);
  EXPECT_EQ(code("comp g f"), ErrorCode::kTypeMismatch);
  EXPECT_EQ(code("comp f x"), ErrorCode::kTypeMismatch);
  EXPECT_EQ(code("f x"), ErrorCode::kArity);
  EXPECT_EQ(code("comp x y f z f"), ErrorCode::kTypeMismatch);

  // Implicit application of a let over a non-ps context.
  Environment with_let = testing::load_text(
      "coh id (x:*) : x -> x\n"
      "let two (x:*)(y:*) = id x\n");
  Context xy = ctx(with_let, "(a:*)(b:*)");
  EXPECT_NO_THROW(term(with_let, xy, "two a b"));
  try {
    term(with_let, xy, "two a");
    FAIL();
  } catch (const CattError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kArity);
  }
}

TEST(ElaborateApp, ReconstructionMatchesSuppliedArguments) {
  const Environment& env = prelude();
  Context c = ctx(env, testing::kGammaW);
  Term t = term(env, c, "whiskr alpha g");
  const auto& p = std::get<CoherenceDecl>(*env.find(id("whiskr"))).ps;
  EXPECT_TRUE(struct_eq(*t.sub().find(p.locally_max()[0]), v("alpha")));
  EXPECT_TRUE(struct_eq(*t.sub().find(p.locally_max()[1]), v("g")));
  EXPECT_NO_THROW(infer_term(env, c, t));
}

TEST(ProcessDecl, Corpus) {
  EXPECT_EQ(prelude().size(), 13u);
  int cohs = 0;
  for (const Declaration& d : prelude().declarations())
    cohs += std::holds_alternative<CoherenceDecl>(d);
  EXPECT_EQ(cohs, 12);
}

TEST(ProcessDecl, Failures) {
  CattError dup = error_of("coh id (x:*) : x -> x\ncoh id (y:*) : y -> y\n");
  EXPECT_EQ(dup.code(), ErrorCode::kDuplicate);
  ASSERT_TRUE(dup.loc());
  EXPECT_EQ(dup.loc()->line, 2);

  CattError proj = error_of(testing::read_file(testing::data_path("proj.catt")));
  EXPECT_EQ(proj.code(), ErrorCode::kSideCondition);
  EXPECT_NE(proj.message().find("{y, f}"), std::string::npos);

  CattError reordered =
      error_of(testing::read_file(testing::data_path("reordered.catt")));
  EXPECT_EQ(reordered.code(), ErrorCode::kNotPsContext);

  CattError shadow = error_of("coh id (x:*) : x -> x\nlet k (id:*) = id\n");
  EXPECT_EQ(shadow.code(), ErrorCode::kDuplicate);

  CattError twice = error_of("coh k (x:*)(x:*) : x -> x\n");
  EXPECT_EQ(twice.code(), ErrorCode::kDuplicate);

  CattError dims = error_of("coh k (x:*)(y:*)(f:x->y) : x -> f\n");
  EXPECT_EQ(dims.code(), ErrorCode::kTypeMismatch);
}

}  // namespace
}  // namespace catt
