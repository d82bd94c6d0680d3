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

#include "macl/concepts.hpp"
#include "macl/context.hpp"
#include "macl/lattice.hpp"

// Brute-force ground truth. Everything here enumerates raw candidate spaces
// (powersets, full function spaces, partition pairs) and checks definitions
// directly; none of it calls the production enumeration paths. The
// duplication with the fast modules is deliberate - these exist to catch
// bugs there, and they stay dumb on purpose.

namespace macl {
namespace oracle {

// All blocks by powerset scan of the definition. TooLarge above 16 elements.
std::vector<std::vector<int>> brute_blocks(const Lattice& lat);

// Inclusion-minimal elements of brute_blocks.
std::vector<std::vector<int>> brute_minimal_blocks(const Lattice& lat);

// Meet-irreducibles by the definitional pair scan: x != top and
// x = meet(y, z) implies x in {y, z}.
std::vector<int> brute_meet_irreducibles(const Lattice& lat);

// All concepts by scanning every g : B -> chain for closedness.
// TooLarge when (n+1)^|B| exceeds 10^6. Canonically sorted by extent.
std::vector<FormalConcept> brute_concepts(const Context& ctx);

// All decompositions by scanning every pair of set partitions of A and B
// with every pairing of their parts, checking the definition on R and
// sigma. TooLarge above 5 attributes or objects.
std::vector<SubcontextDecomposition> brute_decompositions(const Context& ctx);

// Independent max-scan residuation of a conjunctor table (cross-check for
// the closed forms used by the builtin triples). Returns (res_left,
// res_right); NoMaximum on an empty residuation set.
std::pair<std::vector<Grade>, std::vector<Grade>> residua_by_scan(
    GradeChain chain, const std::vector<Grade>& conj);

}  // namespace oracle
}  // namespace macl
