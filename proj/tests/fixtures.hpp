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

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "macl/blocks.hpp"
#include "macl/concepts.hpp"
#include "macl/context.hpp"
#include "macl/lattice.hpp"

// Shared fixtures. The two running contexts differ only in sigma: both put
// the Lukasiewicz conjunctor on (a1, b2); the "prime" variant adds it on
// (a3, b3), which kills every decomposition that separates b3 from a3.
// Golden concept data lives here in canonical extent order (lexicographic),
// frozen from an independent full-space scan.

namespace fixtures {

using macl::Context;
using macl::FormalConcept;
using macl::Frame;
using macl::GradeChain;
using macl::GradeVec;
using macl::Lattice;

inline Frame gl_frame(int n = 5) {
  GradeChain chain{n};
  return Frame{chain,
               {macl::builtin_triple(chain, macl::TNormKind::Godel, "G"),
                macl::builtin_triple(chain, macl::TNormKind::Lukasiewicz, "L")}};
}

// A = {a1,a2,a3}, B = {b1..b4}, n = 5, R rows (3,4,0,0), (0,0,2,0), (0,0,0,5).
inline Context running_context(bool prime) {
  Frame frame = gl_frame();
  std::vector<int> sigma(12, 0);  // all G
  sigma[0 * 4 + 1] = 1;           // L at (a1, b2)
  if (prime) sigma[2 * 4 + 2] = 1;  // L at (a3, b3)
  return Context(std::move(frame), {"a1", "a2", "a3"},
                 {"b1", "b2", "b3", "b4"},
                 {3, 4, 0, 0,  //
                  0, 0, 2, 0,  //
                  0, 0, 0, 5},
                 std::move(sigma));
}

inline Context sigma_context() { return running_context(false); }
inline Context sigma_prime_context() { return running_context(true); }

// extent over b1..b4, intent over a1..a3, canonical (lexicographic) order
inline std::vector<FormalConcept> golden_sigma_concepts() {
  return {
      {{0, 0, 0, 0}, {5, 5, 5}}, {{0, 0, 0, 5}, {0, 0, 5}},
      {{0, 0, 2, 0}, {0, 5, 0}}, {{0, 0, 5, 0}, {0, 2, 0}},
      {{3, 4, 0, 0}, {5, 0, 0}}, {{3, 5, 0, 0}, {4, 0, 0}},
      {{5, 5, 0, 0}, {3, 0, 0}}, {{5, 5, 5, 5}, {0, 0, 0}},
  };
}

inline std::vector<std::pair<int, int>> golden_sigma_covers() {
  return {{0, 1}, {0, 2}, {0, 4}, {1, 7}, {2, 3},
          {3, 7}, {4, 5}, {5, 6}, {6, 7}};
}

inline std::vector<FormalConcept> golden_sigma_prime_concepts() {
  return {
      {{0, 0, 0, 0}, {5, 5, 5}}, {{0, 0, 0, 5}, {0, 0, 5}},
      {{0, 0, 1, 0}, {0, 5, 4}}, {{0, 0, 1, 5}, {0, 0, 4}},
      {{0, 0, 2, 0}, {0, 5, 3}}, {{0, 0, 2, 5}, {0, 0, 3}},
      {{0, 0, 3, 0}, {0, 2, 2}}, {{0, 0, 3, 5}, {0, 0, 2}},
      {{0, 0, 4, 0}, {0, 2, 1}}, {{0, 0, 4, 5}, {0, 0, 1}},
      {{0, 0, 5, 0}, {0, 2, 0}}, {{3, 4, 0, 0}, {5, 0, 0}},
      {{3, 5, 0, 0}, {4, 0, 0}}, {{5, 5, 0, 0}, {3, 0, 0}},
      {{5, 5, 5, 5}, {0, 0, 0}},
  };
}

inline std::vector<std::pair<int, int>> golden_sigma_prime_covers() {
  return {{0, 1},  {0, 2},  {0, 11}, {1, 3},   {2, 3},   {2, 4},  {3, 5},
          {4, 5},  {4, 6},  {5, 7},  {6, 7},   {6, 8},   {7, 9},  {8, 9},
          {8, 10}, {9, 14}, {10, 14}, {11, 12}, {12, 13}, {13, 14}};
}

// bot < {a, c, d, e}; a < b < top; c < top; d < {f, g}; e < g; {f, g} < top.
// Minimal blocks: {a,b}, {c}, {bot,d,e,f,g,top}.
inline Lattice nine_element() {
  return Lattice::from_covers(
      {"bot", "a", "b", "c", "d", "e", "f", "g", "top"},
      {{"bot", "a"},
       {"bot", "c"},
       {"bot", "d"},
       {"bot", "e"},
       {"a", "b"},
       {"b", "top"},
       {"c", "top"},
       {"d", "f"},
       {"d", "g"},
       {"e", "g"},
       {"f", "top"},
       {"g", "top"}});
}

inline Lattice diamond() {
  return Lattice::from_covers(
      {"bot", "p", "q", "top"},
      {{"bot", "p"}, {"bot", "q"}, {"p", "top"}, {"q", "top"}});
}

inline Lattice chain3() {
  return Lattice::from_covers({"bot", "m", "top"},
                              {{"bot", "m"}, {"m", "top"}});
}

inline Lattice pentagon() {
  return Lattice::from_covers({"bot", "x", "y", "z", "top"},
                              {{"bot", "x"},
                               {"x", "z"},
                               {"z", "top"},
                               {"bot", "y"},
                               {"y", "top"}});
}

// Boolean cube on three atoms; every non-bound element is comparable into
// every corner, so the whole lattice has no blocks at all.
inline Lattice boolean_cube() {
  return Lattice::from_covers({"bot", "x", "y", "z", "xy", "xz", "yz", "top"},
                              {{"bot", "x"},
                               {"bot", "y"},
                               {"bot", "z"},
                               {"x", "xy"},
                               {"x", "xz"},
                               {"y", "xy"},
                               {"y", "yz"},
                               {"z", "xz"},
                               {"z", "yz"},
                               {"xy", "top"},
                               {"xz", "top"},
                               {"yz", "top"}});
}

// Normalized random context: 2..4 attributes and objects, chain up to n = 5,
// sigma drawn from {Godel, Lukasiewicz}. Rejection-samples the relation
// until every row and column holds both a bottom and a non-bottom grade.
inline Context random_context(std::mt19937& rng) {
  std::uniform_int_distribution<int> size_dist(2, 4), n_dist(1, 5);
  const int na = size_dist(rng), nb = size_dist(rng), n = n_dist(rng);
  Frame frame = gl_frame(n);

  std::uniform_int_distribution<int> grade_dist(0, n), coin(0, 1);
  std::vector<macl::Grade> relation(na * nb);
  while (true) {
    for (auto& g : relation) g = grade_dist(rng);
    bool ok = true;
    for (int a = 0; a < na && ok; ++a) {
      bool zero = false, nonzero = false;
      for (int b = 0; b < nb; ++b) {
        (relation[a * nb + b] == 0 ? zero : nonzero) = true;
      }
      ok = zero && nonzero;
    }
    for (int b = 0; b < nb && ok; ++b) {
      bool zero = false, nonzero = false;
      for (int a = 0; a < na; ++a) {
        (relation[a * nb + b] == 0 ? zero : nonzero) = true;
      }
      ok = zero && nonzero;
    }
    if (ok) break;
  }

  std::vector<int> sigma(na * nb);
  for (auto& s : sigma) s = coin(rng);

  std::vector<std::string> attrs, objs;
  for (int a = 0; a < na; ++a) attrs.push_back("a" + std::to_string(a + 1));
  for (int b = 0; b < nb; ++b) objs.push_back("b" + std::to_string(b + 1));
  return Context(std::move(frame), std::move(attrs), std::move(objs),
                 std::move(relation), std::move(sigma));
}

}  // namespace fixtures
