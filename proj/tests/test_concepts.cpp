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

#include <algorithm>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "macl/concepts.hpp"
#include "macl/oracle.hpp"

using namespace macl;

namespace {

// lattice-order axioms, checked definitionally against leq
void check_order_tables(const ConceptLattice& lat) {
  const int n = lat.size();
  for (int c = 0; c < n; ++c) {
    CHECK(lat.leq(lat.bottom(), c));
    CHECK(lat.leq(c, lat.top()));
    for (int d = 0; d < n; ++d) {
      const int m = lat.meet(c, d), j = lat.join(c, d);
      CHECK(lat.leq(m, c));
      CHECK(lat.leq(m, d));
      CHECK(lat.leq(c, j));
      CHECK(lat.leq(d, j));
      for (int e = 0; e < n; ++e) {
        if (lat.leq(e, c) && lat.leq(e, d)) CHECK(lat.leq(e, m));
        if (lat.leq(c, e) && lat.leq(d, e)) CHECK(lat.leq(j, e));
      }
    }
  }
}

}  // namespace

TEST_CASE("derivation operators on the running context") {
  Context ctx = fixtures::sigma_prime_context();

  // deriving the crisp singleton {b3} upward
  GradeVec g{0, 0, 5, 0};
  GradeVec f = derive_up(ctx, g);
  CHECK(f == GradeVec{0, 2, 0});

  // and back down
  CHECK(derive_down(ctx, f) == GradeVec{0, 0, 5, 0});

  CHECK_THROWS_AS(derive_up(ctx, GradeVec{0, 0}), InvalidContext);
  CHECK_THROWS_AS(derive_down(ctx, GradeVec{0}), InvalidContext);
}

TEST_CASE("derivations form a Galois connection") {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    Context ctx = fixtures::random_context(rng);
    std::uniform_int_distribution<int> grade(0, ctx.chain().n);

    GradeVec g(ctx.n_objects()), h(ctx.n_objects());
    for (auto& v : g) v = grade(rng);
    for (auto& v : h) v = grade(rng);

    GradeVec up_g = derive_up(ctx, g);
    // extensivity of the closure
    CHECK(pointwise_leq(g, derive_down(ctx, up_g)));
    // antitone
    GradeVec both = pointwise_min(g, h);
    CHECK(pointwise_leq(up_g, derive_up(ctx, both)));
    // up(down(up(g))) = up(g)
    CHECK(derive_up(ctx, derive_down(ctx, up_g)) == up_g);
  }
}

TEST_CASE("sigma-prime: the fifteen golden concepts") {
  Context ctx = fixtures::sigma_prime_context();
  ConceptLattice lat = enumerate_concepts(ctx);

  std::vector<FormalConcept> golden = fixtures::golden_sigma_prime_concepts();
  REQUIRE(lat.size() == 15);
  CHECK(lat.concepts() == golden);
  CHECK(lat.covers() == fixtures::golden_sigma_prime_covers());
  CHECK(lat.concepts() == oracle::brute_concepts(ctx));

  CHECK(lat.meet_irreducibles() ==
        std::vector<int>{1, 3, 5, 7, 9, 10, 11, 12, 13});
  check_order_tables(lat);
}

TEST_CASE("sigma: the eight golden concepts and the bent diagram") {
  Context ctx = fixtures::sigma_context();
  ConceptLattice lat = enumerate_concepts(ctx);

  REQUIRE(lat.size() == 8);
  CHECK(lat.concepts() == fixtures::golden_sigma_concepts());
  CHECK(lat.covers() == fixtures::golden_sigma_covers());
  CHECK(lat.concepts() == oracle::brute_concepts(ctx));

  CHECK(lat.meet_irreducibles() == std::vector<int>{1, 2, 3, 4, 5, 6});
  check_order_tables(lat);

  SUBCASE("extent lookup") {
    CHECK(lat.find_extent(GradeVec{0, 0, 2, 0}) == 2);
    CHECK(lat.find_extent(GradeVec{0, 0, 3, 0}) == -1);
    CHECK(lat.index_of_extent(GradeVec{5, 5, 5, 5}) == 7);
    CHECK_THROWS_AS(lat.index_of_extent(GradeVec{1, 1, 1, 1}),
                    UnknownConcept);
  }

  SUBCASE("order lattice mirrors the concept order") {
    Lattice order = lat.order_lattice();
    CHECK(order.size() == 8);
    CHECK(order.label(0) == "C0");
    CHECK(order.label(7) == "C7");
    CHECK(order.covers() == lat.covers());
    for (int c = 0; c < 8; ++c) {
      for (int d = 0; d < 8; ++d) {
        CHECK(order.leq(c, d) == lat.leq(c, d));
        CHECK(order.meet(c, d) == lat.meet(c, d));
        CHECK(order.join(c, d) == lat.join(c, d));
      }
    }
  }
}

TEST_CASE("fuzzy attribute and object concepts") {
  Context ctx = fixtures::sigma_prime_context();
  ConceptLattice lat = enumerate_concepts(ctx);

  for (int a = 0; a < ctx.n_attributes(); ++a) {
    for (Grade x = 0; x <= ctx.chain().n; ++x) {
      FormalConcept c = fuzzy_attribute_concept(ctx, a, x);
      // closed pair, present in the lattice
      CHECK(derive_up(ctx, c.extent) == c.intent);
      CHECK(derive_down(ctx, c.intent) == c.extent);
      CHECK(lat.find_extent(c.extent) >= 0);
      CHECK(fuzzy_attribute_extent(ctx, a, x) == c.extent);
      if (x == 0) CHECK(lat.index_of_extent(c.extent) == lat.top());
    }
  }
  for (int b = 0; b < ctx.n_objects(); ++b) {
    for (Grade y = 0; y <= ctx.chain().n; ++y) {
      FormalConcept c = fuzzy_object_concept(ctx, b, y);
      CHECK(derive_up(ctx, c.extent) == c.intent);
      CHECK(derive_down(ctx, c.intent) == c.extent);
      CHECK(lat.find_extent(c.extent) >= 0);
      if (y == 0) CHECK(lat.index_of_extent(c.extent) == lat.bottom());
    }
  }
}

TEST_CASE("meet-irreducible concepts carry their generators") {
  Context ctx = fixtures::sigma_prime_context();
  ConceptLattice lat = enumerate_concepts(ctx);
  std::vector<IrreducibleConcept> irr = meet_irreducible_concepts(ctx, lat);

  // characterization agrees with the cover-count scan
  std::vector<int> indices;
  for (const IrreducibleConcept& ic : irr) indices.push_back(ic.concept_index);
  CHECK(indices == lat.meet_irreducibles());

  // the concept with extent {b3} is generated by (a2, 1/5) and (a2, 2/5)
  int c = lat.index_of_extent(GradeVec{0, 0, 5, 0});
  bool found = false;
  for (const IrreducibleConcept& ic : irr) {
    if (ic.concept_index == c) {
      found = true;
      CHECK(ic.generators ==
            std::vector<std::pair<int, Grade>>{{1, 1}, {1, 2}});
    }
  }
  CHECK(found);

  // every generator really produces its concept
  for (const IrreducibleConcept& ic : irr) {
    CHECK_FALSE(ic.generators.empty());
    for (auto [a, x] : ic.generators) {
      CHECK(fuzzy_attribute_extent(ctx, a, x) ==
            lat.at(ic.concept_index).extent);
    }
  }
}

TEST_CASE("every concept is the meet of the irreducibles above it") {
  for (Context ctx :
       {fixtures::sigma_context(), fixtures::sigma_prime_context()}) {
    ConceptLattice lat = enumerate_concepts(ctx);
    std::vector<int> all_attrs;
    for (int a = 0; a < ctx.n_attributes(); ++a) all_attrs.push_back(a);

    for (int c = 0; c < lat.size(); ++c) {
      auto [m_f, m_c] = irreducible_index_sets(ctx, lat, all_attrs, c);
      // meet of the irreducibles above c gives back c (empty meet is top)
      int acc = lat.top();
      for (int m : m_c) acc = lat.meet(acc, m);
      CHECK(acc == c);
      for (int m : m_c) CHECK(lat.leq(c, m));
      CHECK(std::includes(m_f.begin(), m_f.end(), m_c.begin(), m_c.end()));
    }
  }
}

TEST_CASE("generator order equivalence") {
  for (Context ctx :
       {fixtures::sigma_context(), fixtures::sigma_prime_context()}) {
    for (int a = 0; a < ctx.n_attributes(); ++a) {
      for (int b = 0; b < ctx.n_objects(); ++b) {
        for (Grade x = 0; x <= ctx.chain().n; ++x) {
          for (Grade y = 0; y <= ctx.chain().n; ++y) {
            RepresentationCheck rc = check_representation(ctx, a, x, b, y);
            CHECK(rc.consistent());
          }
        }
      }
    }
  }
}

TEST_CASE("random contexts: concepts match the full-space oracle") {
  std::mt19937 rng(20260814);
  for (int i = 0; i < 60; ++i) {
    Context ctx = fixtures::random_context(rng);
    CAPTURE(i);
    ConceptLattice lat = enumerate_concepts(ctx);
    CHECK(lat.concepts() == oracle::brute_concepts(ctx));
    CHECK(lat.size() >= 3);  // normalized contexts always have bottom < top

    std::vector<int> indices;
    for (const IrreducibleConcept& ic : meet_irreducible_concepts(ctx, lat)) {
      indices.push_back(ic.concept_index);
    }
    CHECK(indices == lat.meet_irreducibles());
  }
}
