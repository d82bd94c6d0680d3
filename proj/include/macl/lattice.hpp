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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "macl/errors.hpp"

// Finite bounded lattices, built eagerly from a cover relation (or a full
// order) and validated up front: acyclicity, unique bottom/top, and a
// greatest lower / least upper bound for every pair. All queries after
// construction are table lookups; instances are immutable and safe to share
// across threads.

namespace macl {

class Lattice {
 public:
  // labels: distinct element names; covers: (lower, upper) pairs. Extra
  // transitive pairs are tolerated, the canonical Hasse diagram is
  // recomputed from the generated order. Throws DuplicateLabel,
  // UnknownElement, CyclicCovers, TooSmall (fewer than 3 elements),
  // NotBounded (no unique bottom/top), NotALattice (pair without a meet or
  // join, named in the message).
  static Lattice from_covers(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& covers);

  // Same validation, starting from a full order relation (row-major
  // leq[i*size+j] = 1 iff i <= j).
  static Lattice from_order(std::vector<std::string> labels,
                            std::vector<std::uint8_t> leq);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_[x]; }
  // Throws UnknownElement.
  int index_of(std::string_view label) const;

  bool leq(int x, int y) const { return leq_[x * size() + y] != 0; }
  int meet(int x, int y) const { return meet_[x * size() + y]; }
  int join(int x, int y) const { return join_[x * size() + y]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // meet/join over a set; empty set yields top/bottom respectively.
  int meet_of(std::span<const int> xs) const;
  int join_of(std::span<const int> xs) const;

  // Canonical Hasse diagram, sorted (lower, upper) index pairs.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::vector<int> upper_covers(int x) const;
  std::vector<int> lower_covers(int x) const;

  // All y with x <= y (resp. y <= x), ascending indices, x included.
  const std::vector<int>& up_set(int x) const { return up_sets_[x]; }
  const std::vector<int>& down_set(int x) const { return down_sets_[x]; }

  // Elements other than top with exactly one upper cover. On a finite
  // lattice this is exactly the set of meet-irreducible elements (the
  // definitional pair-scan lives in the oracle module as a cross-check).
  std::vector<int> meet_irreducibles() const;

  // The meet-irreducibles above x; their meet is x (finite lattices satisfy
  // the chain condition that makes this decomposition exist).
  std::vector<int> irreducible_decomposition(int x) const;

 private:
  Lattice() = default;
  void finish_construction();  // validates and fills the tables

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<int> meet_, join_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_sets_, down_sets_;
  int bottom_ = -1, top_ = -1;
};

}  // namespace macl
