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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "macl/grades.hpp"

// Adjoint triples (&, res_left, res_right) on a finite grade chain.
//
// The defining property ties the three tables together:
//
//   x <= res_left(z, y)  iff  conj(x, y) <= z  iff  y <= res_right(z, x)
//
// for all grades x, y, z. Everything in this module is table-driven; the
// built-in families fill their tables from exact integer formulas on the
// numerators (no floating point touches the ceil/floor discretizations).

namespace macl {

class AdjointTriple {
 public:
  // Raw constructor: caches derived flags but performs no adjointness
  // verification, so tests can build deliberately broken triples and watch
  // verify_adjoint reject them. The factory functions below never hand out
  // an unverified triple.
  AdjointTriple(std::string name, GradeChain chain, std::vector<Grade> conj,
                std::vector<Grade> res_left, std::vector<Grade> res_right);

  const std::string& name() const { return name_; }
  GradeChain chain() const { return chain_; }

  // x & y
  Grade conj(Grade x, Grade y) const { return conj_[idx(x, y)]; }
  // largest x with x & y <= z
  Grade res_left(Grade z, Grade y) const { return res_left_[idx(z, y)]; }
  // largest y with x & y <= z
  Grade res_right(Grade z, Grade x) const { return res_right_[idx(z, x)]; }

  // true iff conj(x, y) = bottom for some x, y != bottom
  bool has_zero_divisors() const { return zero_divisors_.has_value(); }
  // first witness in ascending (x, y) scan order, if any
  std::optional<std::pair<Grade, Grade>> zero_divisor_witness() const {
    return zero_divisors_;
  }
  // conj(x, top) = conj(top, x) = x for all x
  bool boundary_both_args() const { return boundary_both_; }

  const std::vector<Grade>& conj_table() const { return conj_; }
  const std::vector<Grade>& res_left_table() const { return res_left_; }
  const std::vector<Grade>& res_right_table() const { return res_right_; }

 private:
  int idx(Grade a, Grade b) const { return a * chain_.size() + b; }

  std::string name_;
  GradeChain chain_;
  std::vector<Grade> conj_, res_left_, res_right_;
  std::optional<std::pair<Grade, Grade>> zero_divisors_;
  bool boundary_both_ = false;
};

enum class TNormKind { Godel, Lukasiewicz, Product };

// Discretizations of the Goedel, Lukasiewicz and product t-norms onto the
// chain 0..n: conj(x, y) = ceil(n * t(x/n, y/n)) / n. Goedel and Lukasiewicz
// carry the matching floor-discretized residuum in closed form; the product
// residua come from the generic max-scan. All are verified on construction.
AdjointTriple builtin_triple(GradeChain chain, TNormKind kind);
AdjointTriple builtin_triple(GradeChain chain, TNormKind kind,
                             std::string name);

// Residuates an arbitrary conjunctor table (row-major, (n+1)^2 entries):
//   res_left(z, y) = max{x : conj(x, y) <= z}
//   res_right(z, x) = max{y : conj(x, y) <= z}
// Throws NotMonotone if the table is not order-preserving in each argument
// (witness in the message), NoMaximum if some residuation set is empty,
// which happens exactly when the bottom row/column of the table is not all
// bottom.
std::pair<std::vector<Grade>, std::vector<Grade>> residua_from_conjunctor(
    GradeChain chain, const std::vector<Grade>& conj);

// Builds a triple from a user-supplied conjunctor table via
// residua_from_conjunctor. The result always satisfies the adjoint property.
AdjointTriple triple_from_table(std::string name, GradeChain chain,
                                std::vector<Grade> conj);

struct AdjointCounterexample {
  Grade x, y, z;
  std::string detail;  // which leg of the equivalence broke
};

// Exhaustive check of the adjoint property over all (x, y, z).
// Returns the first counterexample in scan order, or nullopt on pass.
std::optional<AdjointCounterexample> verify_adjoint(const AdjointTriple& t);

// The seven consequences of adjointness, checked exhaustively:
//   1. conj is order-preserving in both arguments
//   2. residua are order-preserving in the first and
//      order-reversing in the second argument
//   3. conj(bottom, y) = bottom and res_left(top, y) = top
//   4. conj(x, bottom) = bottom and res_right(top, x) = top
//   5. res_right(z, bottom) = top and res_left(z, bottom) = top
//   6. res_left(z, y) = max{x : conj(x, y) <= z}
//   7. res_right(z, x) = max{y : conj(x, y) <= z}
struct TriplePropertyReport {
  struct Item {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when pass
  };
  std::vector<Item> items;
  bool all_pass() const;
};

TriplePropertyReport verify_triple_properties(const AdjointTriple& t);

}  // namespace macl
