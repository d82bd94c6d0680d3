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

#include "macl/errors.hpp"

namespace macl {

// A truth degree on the regular chain 0 < 1/n < ... < n/n. Degrees are kept
// as integer numerators so that the ceil/floor discretizations in the
// conjunctor formulas stay exact; the rational value k/n only materializes
// when rendering or parsing text.
using Grade = int;

using GradeVec = std::vector<Grade>;

struct GradeChain {
  int n = 1;  // grades are 0..n

  int size() const { return n + 1; }
  Grade bottom() const { return 0; }
  Grade top() const { return n; }
  bool contains(Grade g) const { return g >= 0 && g <= n; }
};

inline bool operator==(GradeChain a, GradeChain b) { return a.n == b.n; }
inline bool operator!=(GradeChain a, GradeChain b) { return a.n != b.n; }

// "0", "1" or the unreduced fraction "k/n".
std::string grade_to_string(GradeChain chain, Grade g);

// Accepts "k/n" style fractions with any denominator as long as the value
// lands exactly on the chain, plus plain integer strings "0" and "1".
// Throws GridError otherwise.
Grade grade_from_string(GradeChain chain, const std::string& text);

// Snaps a decimal to the chain; the decimal must be an exact grid point
// (checked against an absolute 1e-9 slack, which is tolerance-free for any
// realistic chain size). Throws GridError otherwise.
Grade grade_from_double(GradeChain chain, double value);

bool pointwise_leq(const GradeVec& a, const GradeVec& b);
GradeVec pointwise_min(const GradeVec& a, const GradeVec& b);

}  // namespace macl
