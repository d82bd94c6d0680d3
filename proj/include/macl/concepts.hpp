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

#pragma once

#include <utility>
#include <vector>

#include "macl/context.hpp"
#include "macl/lattice.hpp"

// Concept lattices of fuzzy contexts. The derivation operators
//
//   up(g)(a)   = min over b of res_left(R(a,b), g(b))     (g : B -> chain)
//   down(f)(b) = min over a of res_right(R(a,b), f(a))    (f : A -> chain)
//
// form a Galois connection; concepts are the fixed pairs <g, f> with
// up(g) = f and down(f) = g, ordered by extent. Concept identity is extent
// identity, and the canonical order is lexicographic on extent grade
// vectors (bottom first, top last).

namespace macl {

struct FormalConcept {
  GradeVec extent;  // over objects
  GradeVec intent;  // over attributes

  friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

GradeVec derive_up(const Context& ctx, const GradeVec& g);
GradeVec derive_down(const Context& ctx, const GradeVec& f);

// Extent of the fuzzy attribute (a, x), i.e. the singleton-like map sending
// a to x and the rest of A to bottom, derived downward. Collapses to
// res_right(R(a, b), x) per object b, so it costs one row scan.
GradeVec fuzzy_attribute_extent(const Context& ctx, int a, Grade x);

// <down(phi_{a,x}), up(down(phi_{a,x}))>. x = bottom yields the top concept.
FormalConcept fuzzy_attribute_concept(const Context& ctx, int a, Grade x);

// <down(up(phi_{b,y})), up(phi_{b,y})>. y = bottom yields the bottom
// concept.
FormalConcept fuzzy_object_concept(const Context& ctx, int b, Grade y);

class ConceptLattice {
 public:
  int size() const { return static_cast<int>(concepts_.size()); }
  const FormalConcept& at(int c) const { return concepts_[c]; }
  const std::vector<FormalConcept>& concepts() const { return concepts_; }

  bool leq(int c, int d) const;  // extent inclusion
  int meet(int c, int d) const { return meet_[c * size() + d]; }
  int join(int c, int d) const { return join_[c * size() + d]; }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // Index of the concept with this extent, or -1.
  int find_extent(const GradeVec& extent) const;
  // Same, but throws UnknownConcept.
  int index_of_extent(const GradeVec& extent) const;

  // Concepts with exactly one upper cover (top excluded).
  std::vector<int> meet_irreducibles() const;

  // The concept order as a standalone bounded lattice with labels
  // "C0".."Ck" in canonical order; throws TooSmall below 3 concepts.
  Lattice order_lattice() const;

 private:
  friend ConceptLattice enumerate_concepts(const Context& ctx);

  std::vector<FormalConcept> concepts_;  // sorted by extent
  std::vector<int> meet_, join_;
  std::vector<std::pair<int, int>> covers_;
};

// The whole concept lattice: extents are the meet closure of the fuzzy
// attribute extents seeded with the full extent, intents derived from them.
ConceptLattice enumerate_concepts(const Context& ctx);

// A meet-irreducible concept together with every fuzzy attribute (a, x)
// generating it (x ranges over non-bottom grades).
struct IrreducibleConcept {
  int concept_index = -1;
  std::vector<std::pair<int, Grade>> generators;
};

// Characterization used here: a fuzzy-attribute extent e is irreducible iff
// e is not the full extent and differs from the meet of the strictly larger
// fuzzy-attribute extents. Agrees with the one-upper-cover scan.
std::vector<IrreducibleConcept> meet_irreducible_concepts(
    const Context& ctx, const ConceptLattice& lat);

// (M_F restricted to attributes in attrs,
//  its subset lying above concept c), as ascending concept indices.
std::pair<std::vector<int>, std::vector<int>> irreducible_index_sets(
    const Context& ctx, const ConceptLattice& lat,
    const std::vector<int>& attrs, int c);

// Both sides of the generator-order equivalence: the fuzzy-object concept
// of (b, y) lies below the fuzzy-attribute concept of (a, x) iff
// conj_{sigma(a,b)}(x, y) <= R(a, b). A correct implementation never sees
// the two sides disagree.
struct RepresentationCheck {
  bool lhs = false;  // concept order side
  bool rhs = false;  // conjunctor side
  bool consistent() const { return lhs == rhs; }
};
RepresentationCheck check_representation(const Context& ctx, int a, Grade x,
                                         int b, Grade y);

}  // namespace macl
