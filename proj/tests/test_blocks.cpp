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
#include <vector>

#include "fixtures.hpp"
#include "macl/blocks.hpp"
#include "macl/oracle.hpp"

using namespace macl;

namespace {

std::vector<int> named(const Lattice& lat, std::vector<const char*> names) {
  std::vector<int> out;
  for (const char* n : names) out.push_back(lat.index_of(n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> member_sets(const std::vector<Block>& blocks) {
  std::vector<std::vector<int>> out;
  for (const Block& b : blocks) out.push_back(b.members);
  return out;
}

}  // namespace

TEST_CASE("nine-element lattice: minimal blocks") {
  Lattice lat = fixtures::nine_element();
  std::vector<Block> minimal = enumerate_minimal_blocks(lat);
  std::vector<std::vector<int>> expected = {
      named(lat, {"a", "b"}),
      named(lat, {"c"}),
      named(lat, {"bot", "d", "e", "f", "g", "top"}),
  };
  std::sort(expected.begin(), expected.end());
  CHECK(member_sets(minimal) == expected);
  for (const Block& b : minimal) CHECK(b.minimal);

  CHECK(member_sets(minimal) == oracle::brute_minimal_blocks(lat));
}

TEST_CASE("nine-element lattice: all blocks agree with the powerset oracle") {
  Lattice lat = fixtures::nine_element();
  std::vector<Block> blocks = enumerate_blocks(lat);
  CHECK(blocks.size() == 12);
  CHECK(member_sets(blocks) == oracle::brute_blocks(lat));

  // completeness and minimality flags
  for (const Block& b : blocks) {
    CHECK(b.complete ==
          (b.contains(lat.bottom()) && b.contains(lat.top())));
    bool strictly_contains_some = false;
    for (const Block& other : blocks) {
      if (other.members != b.members &&
          std::includes(b.members.begin(), b.members.end(),
                        other.members.begin(), other.members.end())) {
        strictly_contains_some = true;
      }
    }
    CHECK(b.minimal == !strictly_contains_some);
  }
}

TEST_CASE("fast enumeration matches the oracle on assorted lattices") {
  for (const Lattice& lat :
       {fixtures::diamond(), fixtures::pentagon(), fixtures::chain3()}) {
    CHECK(member_sets(enumerate_blocks(lat)) == oracle::brute_blocks(lat));
    CHECK(member_sets(enumerate_minimal_blocks(lat)) ==
          oracle::brute_minimal_blocks(lat));
  }
}

TEST_CASE("is_block violations come in a fixed order") {
  Lattice lat = fixtures::nine_element();

  SUBCASE("whole lattice is not a proper subset") {
    std::vector<int> all(lat.size());
    for (int i = 0; i < lat.size(); ++i) all[i] = i;
    BlockCheck check = is_block(lat, all);
    CHECK_FALSE(check.ok);
    CHECK(check.violation == BlockCheck::Violation::NotProperSubset);
  }

  SUBCASE("bounds alone are trivial") {
    BlockCheck check = is_block(lat, named(lat, {"bot", "top"}));
    CHECK_FALSE(check.ok);
    CHECK(check.violation == BlockCheck::Violation::Trivial);
    CHECK_FALSE(is_block(lat, std::vector<int>{}).ok);
  }

  SUBCASE("union of the two small minimal blocks is not a sublattice") {
    BlockCheck check = is_block(lat, named(lat, {"a", "b", "c"}));
    CHECK_FALSE(check.ok);
    CHECK(check.violation == BlockCheck::Violation::NotSublattice);
    CHECK_FALSE(check.detail.empty());
  }

  SUBCASE("dropping an inner comparable element breaks up/down closure") {
    BlockCheck check = is_block(lat, named(lat, {"d", "e", "f", "g"}));
    // join(f, g) = top is allowed to be missing only if... it is not:
    // sublattice fails before closure is even consulted.
    CHECK(check.violation == BlockCheck::Violation::NotSublattice);

    BlockCheck closure = is_block(lat, named(lat, {"a"}));
    CHECK_FALSE(closure.ok);
    CHECK(closure.violation == BlockCheck::Violation::NotUpDownClosed);
  }

  SUBCASE("valid blocks pass with and without bounds attached") {
    CHECK(is_block(lat, named(lat, {"a", "b"})).ok);
    CHECK(is_block(lat, named(lat, {"bot", "a", "b", "top"})).ok);
    CHECK(is_block(lat, std::vector<std::string>{"c"}).ok);
    CHECK(is_block(lat, named(lat, {"bot", "d", "e", "f", "g", "top"})).ok);
  }
}

TEST_CASE("minimal_block_of") {
  Lattice lat = fixtures::nine_element();
  Block kd = minimal_block_of(lat, lat.index_of("d"));
  CHECK(kd.members == named(lat, {"bot", "d", "e", "f", "g", "top"}));
  CHECK(kd.minimal);
  CHECK(kd.complete);

  Block ka = minimal_block_of(lat, lat.index_of("a"));
  CHECK(ka.members == named(lat, {"a", "b"}));
  CHECK_FALSE(ka.complete);

  CHECK_THROWS_AS(minimal_block_of(lat, lat.bottom()), BoundElement);
  CHECK_THROWS_AS(minimal_block_of(lat, lat.top()), BoundElement);

  SUBCASE("diamond: each atom is its own minimal block") {
    Lattice dia = fixtures::diamond();
    Block kp = minimal_block_of(dia, dia.index_of("p"));
    CHECK(kp.members == std::vector<int>{dia.index_of("p")});
    std::vector<Block> minimal = enumerate_minimal_blocks(dia);
    CHECK(member_sets(minimal) ==
          std::vector<std::vector<int>>{{dia.index_of("p")},
                                        {dia.index_of("q")}});
  }

  SUBCASE("boolean cube is block-free") {
    Lattice cube = fixtures::boolean_cube();
    CHECK_THROWS_AS(minimal_block_of(cube, cube.index_of("x")), WholeLattice);
    CHECK_THROWS_AS(enumerate_minimal_blocks(cube), NoBlocks);
    CHECK(oracle::brute_blocks(cube).empty());
    CHECK(enumerate_block_decompositions(cube).empty());
  }
}

TEST_CASE("classify_pair") {
  Lattice lat = fixtures::nine_element();
  std::vector<Block> blocks = enumerate_blocks(lat);
  auto find = [&](const std::vector<int>& members) -> const Block& {
    for (const Block& b : blocks) {
      if (b.members == members) return b;
    }
    REQUIRE(false);
    return blocks.front();
  };

  const Block& ab = find(named(lat, {"a", "b"}));
  const Block& ab_full = find(named(lat, {"bot", "a", "b", "top"}));
  const Block& c_full = find(named(lat, {"bot", "c", "top"}));

  PairClassification indep = classify_pair(ab_full, c_full);
  CHECK(indep.independent);

  PairClassification inter = classify_pair(ab, ab_full);
  CHECK_FALSE(inter.independent);
  CHECK(inter.intersection == ab.members);

  Lattice other = fixtures::diamond();
  Block foreign = minimal_block_of(other, other.index_of("p"));
  CHECK_THROWS_AS(classify_pair(ab, foreign), DifferentCarrier);
}

TEST_CASE("union and complement of blocks") {
  Lattice lat = fixtures::nine_element();
  Block ka = minimal_block_of(lat, lat.index_of("a"));
  Block kc = minimal_block_of(lat, lat.index_of("c"));
  Block kd = minimal_block_of(lat, lat.index_of("d"));  // complete

  // The union of all three minimal blocks covers everything.
  CHECK_THROWS_AS(union_blocks({ka, kc, kd}), UnionIsWholeLattice);

  Block u = union_blocks({ka, kd});
  CHECK(u.members == named(lat, {"bot", "a", "b", "d", "e", "f", "g", "top"}));
  CHECK(u.complete);

  CHECK_THROWS_AS(union_blocks({ka, kc}), NoCompleteBlock);

  Block comp = complement_block(ka);
  CHECK(comp.members == named(lat, {"bot", "c", "d", "e", "f", "g", "top"}));
  CHECK(comp.complete);
  CHECK(classify_pair(ka, comp).independent);

  SUBCASE("complement of everything-but-bounds is trivial") {
    Lattice three = fixtures::chain3();
    Block km = minimal_block_of(three, three.index_of("m"));
    CHECK_THROWS_AS(complement_block(km), ComplementTrivial);
  }
}

TEST_CASE("block decompositions of the nine-element lattice") {
  Lattice lat = fixtures::nine_element();
  std::vector<BlockDecomposition> decs = enumerate_block_decompositions(lat);
  CHECK(decs.size() == 4);

  for (const BlockDecomposition& dec : decs) {
    CHECK(dec.blocks.size() >= 2);
    for (const Block& b : dec.blocks) {
      CHECK(is_block(lat, b.members).ok);
      CHECK(b.complete);
    }
    // pairwise independent and jointly covering
    std::vector<int> seen(lat.size(), 0);
    for (const Block& b : dec.blocks) {
      for (int x : b.members) seen[x] += 1;
    }
    for (int x = 0; x < lat.size(); ++x) {
      if (x == lat.bottom() || x == lat.top()) {
        CHECK(seen[x] == static_cast<int>(dec.blocks.size()));
      } else {
        CHECK(seen[x] == 1);  // single-home property
      }
    }
  }

  // the finest decomposition (one group per minimal block) is present
  std::vector<std::vector<int>> finest = {
      named(lat, {"bot", "a", "b", "top"}),
      named(lat, {"bot", "c", "top"}),
      named(lat, {"bot", "d", "e", "f", "g", "top"}),
  };
  std::sort(finest.begin(), finest.end());
  bool found = false;
  for (const BlockDecomposition& dec : decs) {
    if (member_sets(dec.blocks) == finest) found = true;
  }
  CHECK(found);
}

TEST_CASE("decomposition counts on the small fixtures") {
  // diamond: the two atoms split; pentagon: {x,z} against {y}; a three
  // element chain has a single minimal block and so nothing to split.
  CHECK(enumerate_block_decompositions(fixtures::diamond()).size() == 1);
  CHECK(enumerate_block_decompositions(fixtures::pentagon()).size() == 1);
  CHECK(enumerate_block_decompositions(fixtures::chain3()).empty());
}
