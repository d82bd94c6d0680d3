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
#include <vector>

#include "macl/lattice.hpp"

// Blocks of a bounded lattice L (|L| >= 3): proper sublattices K with
// K \ {bottom, top} nonempty whose non-bound members carry their whole
// up-set and down-set (minus the bounds) inside K. Independent families of
// blocks covering L are the lattice-side mirror of context decompositions.

namespace macl {

struct Block {
  const Lattice* carrier = nullptr;
  std::vector<int> members;  // ascending element indices
  bool minimal = false;      // no block is strictly contained in it
  bool complete = false;     // contains both bounds

  bool contains(int x) const;
};

// Result of checking the block conditions, which are evaluated in a fixed
// order so reports are deterministic: proper subset first, then
// non-triviality, then sublattice closure, then up/down closure.
struct BlockCheck {
  enum class Violation {
    None,
    NotProperSubset,
    Trivial,        // no member besides the bounds
    NotSublattice,  // some pairwise meet or join escapes
    NotUpDownClosed
  };
  bool ok = false;
  Violation violation = Violation::None;
  std::string detail;  // names the witness elements
};

// members may be given in any order and may repeat; indices are validated.
BlockCheck is_block(const Lattice& lat, const std::vector<int>& members);
BlockCheck is_block(const Lattice& lat,
                    const std::vector<std::string>& member_labels);

// The smallest block containing k, computed as the fixpoint of
//   - adding (up_set(x) | down_set(x)) \ {bottom, top} for every member x
//   - adding pairwise meets and joins of members
// so the bounds enter only when some meet or join forces them. Throws
// BoundElement if k is a bound, WholeLattice if the fixpoint is all of L
// (then no block contains k at all).
Block minimal_block_of(const Lattice& lat, int k);

// Deduplicated minimal_block_of over every non-bound element; these cover
// L \ {bottom, top}. Throws NoBlocks, naming an element whose closure is
// the whole lattice (by the complement property, one such element means the
// lattice has no blocks at all).
std::vector<Block> enumerate_minimal_blocks(const Lattice& lat);

// Every block, generated as (union of minimal blocks) + (subset of bounds)
// and certified through is_block; agrees with the powerset oracle.
std::vector<Block> enumerate_blocks(const Lattice& lat);

// A pair of blocks on one carrier either intersects in a block or is
// independent (meets only in bounds) - never both, never neither.
struct PairClassification {
  bool independent = false;
  std::vector<int> intersection;  // certified block when !independent
};
PairClassification classify_pair(const Block& k1, const Block& k2);

// Union of blocks, at least one of them complete, union a proper subset of
// the carrier: yields a complete block. Throws NoCompleteBlock,
// UnionIsWholeLattice, DifferentCarrier.
Block union_blocks(const std::vector<Block>& blocks);

// (L \ K) + bounds; complete, independent from K, and {K, complement} is a
// block decomposition. Throws ComplementTrivial when nothing but bounds
// remains outside K.
Block complement_block(const Block& k);

struct BlockDecomposition {
  std::vector<Block> blocks;  // pairwise independent, union covers L
};

// All decompositions of L into at least two pairwise independent blocks.
// Groups the minimal blocks in every possible way, attaches both bounds to
// every group, and keeps the families whose groups all certify as blocks.
// Returns an empty list when L has no blocks. Throws TooLarge beyond 12
// minimal blocks (set-partition growth).
std::vector<BlockDecomposition> enumerate_block_decompositions(
    const Lattice& lat);

}  // namespace macl
