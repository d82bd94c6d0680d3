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

#include <string>
#include <string_view>
#include <vector>

#include "macl/residuation.hpp"

// Fuzzy contexts (A, B, R, sigma): attributes A, objects B, a graded
// incidence relation R : A x B -> chain, and a conjunctor assignment sigma
// picking an adjoint triple per cell. Separable subcontexts and their
// zero-divisor-aware decompositions live here too.

namespace macl {

// The shared evaluation structure: one grade chain plus the named adjoint
// triples sigma may refer to. Every triple must satisfy the boundary
// condition in both arguments (checked when a Context is built).
struct Frame {
  GradeChain chain;
  std::vector<AdjointTriple> triples;

  // Throws UnknownConjunctor.
  int index_of(std::string_view name) const;
};

class Context {
 public:
  // relation and sigma are row-major |A| x |B|; relation holds grades,
  // sigma holds indices into frame.triples. Throws InvalidContext (empty
  // sides, duplicate names, size mismatch, triple violating the boundary
  // condition, bad sigma index) or GridError (grade off the chain).
  Context(Frame frame, std::vector<std::string> attributes,
          std::vector<std::string> objects, std::vector<Grade> relation,
          std::vector<int> sigma);

  const Frame& frame() const { return frame_; }
  GradeChain chain() const { return frame_.chain; }
  int n_attributes() const { return static_cast<int>(attributes_.size()); }
  int n_objects() const { return static_cast<int>(objects_.size()); }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::vector<std::string>& objects() const { return objects_; }
  int attribute_index(std::string_view name) const;  // UnknownAttribute
  int object_index(std::string_view name) const;     // UnknownObject

  Grade relation(int a, int b) const { return relation_[a * n_objects() + b]; }
  int sigma(int a, int b) const { return sigma_[a * n_objects() + b]; }
  const AdjointTriple& triple_at(int a, int b) const {
    return frame_.triples[sigma(a, b)];
  }

 private:
  Frame frame_;
  std::vector<std::string> attributes_, objects_;
  std::vector<Grade> relation_;
  std::vector<int> sigma_;
};

// Every attribute row and every object column holds at least one bottom and
// one non-bottom grade. Decomposition (and the whole bridge) requires this.
struct NormalizationReport {
  bool ok = false;
  std::string violation;  // names the offending attribute or object
};
NormalizationReport is_normalized(const Context& ctx);

// (Y, X) with Y a subset of A, X a subset of B, given as ascending index
// vectors. Separable means: both nonempty and proper, some non-bottom grade
// inside Y x X, and R identically bottom on Y x (B\X) and (A\Y) x X.
struct SeparabilityReport {
  bool ok = false;
  std::string violation;
};
SeparabilityReport is_separable_subcontext(const Context& ctx,
                                           const std::vector<int>& attrs,
                                           const std::vector<int>& objs);

struct SubcontextPart {
  std::vector<int> attributes;  // ascending
  std::vector<int> objects;     // ascending

  friend bool operator==(const SubcontextPart&,
                         const SubcontextPart&) = default;
  friend auto operator<=>(const SubcontextPart&,
                          const SubcontextPart&) = default;
};

// All separable subcontexts: exactly the unions of nonempty proper subsets
// of the connected components of the non-bottom incidence graph. Requires a
// normalized context (throws NotNormalized).
std::vector<SubcontextPart> enumerate_separable_subcontexts(
    const Context& ctx);

// A partition of A and B into separable subcontexts such that sigma places
// no zero-divisor conjunctor on any cross rectangle A_k x (B\B_k) or
// (A\A_k) x B_k. Parts are canonically sorted by smallest attribute index.
struct SubcontextDecomposition {
  std::vector<SubcontextPart> parts;

  friend bool operator==(const SubcontextDecomposition&,
                         const SubcontextDecomposition&) = default;
  friend auto operator<=>(const SubcontextDecomposition&,
                          const SubcontextDecomposition&) = default;
};

// Direct re-check of the three decomposition conditions against R and
// sigma, independent of how the candidate was produced.
struct DecompositionCheck {
  bool ok = false;
  std::string violation;
};
DecompositionCheck check_decomposition(const Context& ctx,
                                       const SubcontextDecomposition& dec);

// All decompositions into independent subcontexts, canonically sorted.
// Connected components of the incidence graph are merged along cross
// zero-divisor sigma cells; the results are the partitions of the merged
// units into >= 2 groups (each is re-certified via check_decomposition).
// Throws NotNormalized; TooLarge beyond 12 merged units.
std::vector<SubcontextDecomposition> enumerate_decompositions(
    const Context& ctx);

}  // namespace macl
