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
#include <utility>
#include <vector>

#include "macl/concepts.hpp"

// The two directions of the decomposition equivalence: a context
// decomposition induces a decomposition of the concept lattice into
// independent complete blocks, and any such block family recovers a context
// decomposition. verify_equivalence exercises both directions against the
// independent enumerations on each side.

namespace macl {

struct ConceptBlock {
  std::vector<int> concepts;  // ascending canonical concept indices
  bool complete = false;
};

// For each part (A_k, B_k): the concepts equal to the meet of the
// irreducibles above them generated inside A_k, plus both bounds. Each
// resulting set is certified as a block on the concept order and the family
// as pairwise independent and covering; certification failure throws
// CertificationFailure (a bug, not an input condition). Throws
// InvalidDecomposition if dec fails check_decomposition.
std::vector<ConceptBlock> blocks_from_decomposition(
    const Context& ctx, const ConceptLattice& lat,
    const SubcontextDecomposition& dec);

// From a family of >= 2 pairwise independent blocks covering the concept
// lattice (given as concept index sets): attribute part k collects the
// attributes whose fuzzy-attribute concepts land in block k minus bounds,
// object parts dually via fuzzy-object concepts. Throws NotADecomposition
// if the family is not an independent block cover, PartitionFailure if the
// recovered sets fail to partition A or B.
std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
partition_from_blocks(const Context& ctx, const ConceptLattice& lat,
                      const std::vector<std::vector<int>>& blocks);

// partition_from_blocks packaged as a SubcontextDecomposition and
// re-certified via check_decomposition (CertificationFailure on violation).
SubcontextDecomposition subcontexts_from_blocks(
    const Context& ctx, const ConceptLattice& lat,
    const std::vector<std::vector<int>>& blocks);

struct EquivalenceReport {
  struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
  };

  int context_decompositions = 0;
  int block_decompositions = 0;
  // context decomposition index -> index of its image in the block-side
  // enumeration (forward direction).
  std::vector<std::pair<int, int>> forward_matches;
  // block decomposition index -> index of its preimage on the context side.
  std::vector<std::pair<int, int>> backward_matches;
  std::vector<Check> checks;
  bool pass = false;
};

// Enumerates decompositions on both sides independently, then checks:
//   - both sides are empty together or nonempty together
//   - the image of every context decomposition appears in the block-side
//     enumeration, and the recovered partition is the identity round trip
//   - the image of every block decomposition appears in the context-side
//     enumeration, and the round trip through blocks is the identity
//   - the finest decompositions map onto each other in both directions
// Requires a normalized context.
EquivalenceReport verify_equivalence(const Context& ctx);

}  // namespace macl
