// Copyright 2026 The macl Authors
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

#include <doctest.h>

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "macl/context.hpp"
#include "macl/oracle.hpp"

using namespace macl;

namespace {

// part helper: attribute and object indices by name
SubcontextPart part(const Context& ctx, std::vector<const char*> attrs,
                    std::vector<const char*> objs) {
  SubcontextPart p;
  for (const char* a : attrs) p.attributes.push_back(ctx.attribute_index(a));
  for (const char* b : objs) p.objects.push_back(ctx.object_index(b));
  return p;
}

}  // namespace

TEST_CASE("context accessors") {
  Context ctx = fixtures::sigma_context();
  CHECK(ctx.n_attributes() == 3);
  CHECK(ctx.n_objects() == 4);
  CHECK(ctx.chain().n == 5);
  CHECK(ctx.relation(0, 1) == 4);
  CHECK(ctx.relation(2, 3) == 5);
  CHECK(ctx.triple_at(0, 1).name() == "L");
  CHECK(ctx.triple_at(0, 0).name() == "G");
  CHECK(ctx.attribute_index("a2") == 1);
  CHECK(ctx.object_index("b4") == 3);
  CHECK_THROWS_AS(ctx.attribute_index("zz"), UnknownAttribute);
  CHECK_THROWS_AS(ctx.object_index("zz"), UnknownObject);
}

TEST_CASE("context construction validation") {
  Frame frame = fixtures::gl_frame();

  CHECK_THROWS_AS(Context(frame, {}, {"b1"}, {}, {}), InvalidContext);
  CHECK_THROWS_AS(Context(frame, {"a1"}, {}, {}, {}), InvalidContext);
  CHECK_THROWS_AS(
      Context(frame, {"a1", "a1"}, {"b1"}, {0, 0}, {0, 0}), InvalidContext);
  CHECK_THROWS_AS(
      Context(frame, {"a1"}, {"b1", "b1"}, {0, 0}, {0, 0}), InvalidContext);
  // size mismatch
  CHECK_THROWS_AS(Context(frame, {"a1"}, {"b1"}, {0, 0}, {0}), InvalidContext);
  // sigma index out of range
  CHECK_THROWS_AS(Context(frame, {"a1"}, {"b1"}, {0}, {7}), InvalidContext);
  // grade off the chain
  CHECK_THROWS_AS(Context(frame, {"a1"}, {"b1"}, {9}, {0}), GridError);
  CHECK_THROWS_AS(Context(frame, {"a1"}, {"b1"}, {-1}, {0}), GridError);

  CHECK_THROWS_AS(frame.index_of("missing"), UnknownConjunctor);

  SUBCASE("frame triples must satisfy the boundary condition") {
    // constant-bottom conjunctor residuates fine but fails x & top = x
    GradeChain chain{2};
    Frame bad{chain, {triple_from_table("zero", chain,
                                        std::vector<Grade>(9, 0))}};
    CHECK_THROWS_AS(Context(bad, {"a1"}, {"b1"}, {1}, {0}), InvalidContext);
  }
}

TEST_CASE("normalization report") {
  CHECK(is_normalized(fixtures::sigma_context()).ok);
  CHECK(is_normalized(fixtures::sigma_prime_context()).ok);

  Frame frame = fixtures::gl_frame();
  // row a2 has no non-bottom entry
  Context no_hit(frame, {"a1", "a2"}, {"b1", "b2"},
                 {5, 0,  //
                  0, 0},
                 {0, 0, 0, 0});
  NormalizationReport r1 = is_normalized(no_hit);
  CHECK_FALSE(r1.ok);
  CHECK(r1.violation.find("a2") != std::string::npos);

  // row a1 is everywhere non-bottom
  Context no_miss(frame, {"a1", "a2"}, {"b1", "b2"},
                  {5, 3,  //
                   0, 2},
                  {0, 0, 0, 0});
  NormalizationReport r2 = is_normalized(no_miss);
  CHECK_FALSE(r2.ok);
  CHECK(r2.violation.find("a1") != std::string::npos);

  // column b3 is all bottom (both rows are fine)
  Context col(frame, {"a1", "a2"}, {"b1", "b2", "b3"},
              {5, 0, 0,  //
               0, 3, 0},
              {0, 0, 0, 0, 0, 0});
  NormalizationReport r3 = is_normalized(col);
  CHECK_FALSE(r3.ok);
  CHECK(r3.violation.find("b3") != std::string::npos);

  CHECK_THROWS_AS(enumerate_separable_subcontexts(col), NotNormalized);
  CHECK_THROWS_AS(enumerate_decompositions(col), NotNormalized);
}

TEST_CASE("separable subcontexts of the running context") {
  Context ctx = fixtures::sigma_context();

  CHECK(is_separable_subcontext(ctx, {0}, {0, 1}).ok);
  CHECK(is_separable_subcontext(ctx, {1}, {2}).ok);
  CHECK(is_separable_subcontext(ctx, {2}, {3}).ok);
  CHECK(is_separable_subcontext(ctx, {0, 1}, {0, 1, 2}).ok);
  CHECK(is_separable_subcontext(ctx, {0, 2}, {0, 1, 3}).ok);
  CHECK(is_separable_subcontext(ctx, {1, 2}, {2, 3}).ok);

  // R(a1, b2) = 4/5 escapes the rectangle
  CHECK_FALSE(is_separable_subcontext(ctx, {0}, {0}).ok);
  // nothing non-bottom inside
  CHECK_FALSE(is_separable_subcontext(ctx, {1}, {3}).ok);
  // empty and improper rectangles
  CHECK_FALSE(is_separable_subcontext(ctx, {}, {0}).ok);
  CHECK_FALSE(is_separable_subcontext(ctx, {0, 1, 2}, {0, 1, 2, 3}).ok);

  std::vector<SubcontextPart> subs = enumerate_separable_subcontexts(ctx);
  REQUIRE(subs.size() == 6);
  for (const SubcontextPart& p : subs) {
    CHECK(is_separable_subcontext(ctx, p.attributes, p.objects).ok);
  }
  // same incidence graph, so same subcontexts for sigma-prime
  CHECK(enumerate_separable_subcontexts(fixtures::sigma_prime_context()) ==
        subs);

  std::vector<SubcontextPart> expected = {
      part(ctx, {"a1"}, {"b1", "b2"}),
      part(ctx, {"a1", "a2"}, {"b1", "b2", "b3"}),
      part(ctx, {"a1", "a3"}, {"b1", "b2", "b4"}),
      part(ctx, {"a2"}, {"b3"}),
      part(ctx, {"a2", "a3"}, {"b3", "b4"}),
      part(ctx, {"a3"}, {"b4"}),
  };
  std::sort(expected.begin(), expected.end());
  CHECK(subs == expected);
}

TEST_CASE("decompositions of sigma: all four splits") {
  Context ctx = fixtures::sigma_context();
  std::vector<SubcontextDecomposition> decs = enumerate_decompositions(ctx);
  REQUIRE(decs.size() == 4);

  SubcontextDecomposition finest{{part(ctx, {"a1"}, {"b1", "b2"}),
                                  part(ctx, {"a2"}, {"b3"}),
                                  part(ctx, {"a3"}, {"b4"})}};
  SubcontextDecomposition one_six{{part(ctx, {"a1"}, {"b1", "b2"}),
                                   part(ctx, {"a2", "a3"}, {"b3", "b4"})}};
  SubcontextDecomposition three_four{
      {part(ctx, {"a1", "a2"}, {"b1", "b2", "b3"}),
       part(ctx, {"a3"}, {"b4"})}};
  SubcontextDecomposition two_five{
      {part(ctx, {"a1", "a3"}, {"b1", "b2", "b4"}),
       part(ctx, {"a2"}, {"b3"})}};

  CHECK(decs == std::vector<SubcontextDecomposition>{finest, one_six,
                                                     three_four, two_five});
  for (const SubcontextDecomposition& d : decs) {
    CHECK(check_decomposition(ctx, d).ok);
  }
  CHECK(decs == oracle::brute_decompositions(ctx));
}

TEST_CASE("sigma-prime keeps only the split that preserves (a3, b3)") {
  Context ctx = fixtures::sigma_prime_context();
  std::vector<SubcontextDecomposition> decs = enumerate_decompositions(ctx);
  REQUIRE(decs.size() == 1);
  CHECK(decs[0] == SubcontextDecomposition{{part(ctx, {"a1"}, {"b1", "b2"}),
                                            part(ctx, {"a2", "a3"},
                                                 {"b3", "b4"})}});
  CHECK(decs == oracle::brute_decompositions(ctx));

  SUBCASE("the zero-divisor cell is named when a split crosses it") {
    SubcontextDecomposition bad{{part(ctx, {"a1"}, {"b1", "b2"}),
                                 part(ctx, {"a2"}, {"b3"}),
                                 part(ctx, {"a3"}, {"b4"})}};
    DecompositionCheck check = check_decomposition(ctx, bad);
    CHECK_FALSE(check.ok);
    CHECK(check.violation.find("a3") != std::string::npos);
    CHECK(check.violation.find("b3") != std::string::npos);
    CHECK(check.violation.find("L") != std::string::npos);
  }
}

TEST_CASE("check_decomposition rejects malformed families") {
  Context ctx = fixtures::sigma_context();

  // fewer than two parts
  SubcontextDecomposition single{
      {part(ctx, {"a1", "a2", "a3"}, {"b1", "b2", "b3", "b4"})}};
  CHECK_FALSE(check_decomposition(ctx, single).ok);

  // not a partition: a3 missing
  SubcontextDecomposition missing{{part(ctx, {"a1"}, {"b1", "b2"}),
                                   part(ctx, {"a2"}, {"b3", "b4"})}};
  CHECK_FALSE(check_decomposition(ctx, missing).ok);

  // not a partition: a1 twice
  SubcontextDecomposition twice{{part(ctx, {"a1"}, {"b1", "b2"}),
                                 part(ctx, {"a1", "a2", "a3"}, {"b3", "b4"})}};
  CHECK_FALSE(check_decomposition(ctx, twice).ok);

  // partition, but R crosses the rectangle boundary
  SubcontextDecomposition crossed{{part(ctx, {"a1"}, {"b1", "b3"}),
                                   part(ctx, {"a2", "a3"}, {"b2", "b4"})}};
  CHECK_FALSE(check_decomposition(ctx, crossed).ok);
}

TEST_CASE("random contexts: enumeration matches the oracle") {
  std::mt19937 rng(20260814);
  for (int i = 0; i < 60; ++i) {
    Context ctx = fixtures::random_context(rng);
    CAPTURE(i);
    CHECK(enumerate_decompositions(ctx) == oracle::brute_decompositions(ctx));

    std::vector<SubcontextPart> subs = enumerate_separable_subcontexts(ctx);
    for (const SubcontextPart& p : subs) {
      CHECK(is_separable_subcontext(ctx, p.attributes, p.objects).ok);
    }
  }
}
