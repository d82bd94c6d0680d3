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

#include "macl/grades.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace macl {

std::string grade_to_string(GradeChain chain, Grade g) {
  if (g == 0) return "0";
  if (g == chain.n) return "1";
  return std::to_string(g) + "/" + std::to_string(chain.n);
}

namespace {

bool parse_int(const std::string& s, std::int64_t* out) {
  if (s.empty()) return false;
  std::int64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
    if (v > 1'000'000'000'000LL) return false;
  }
  *out = v;
  return true;
}

}  // namespace

Grade grade_from_string(GradeChain chain, const std::string& text) {
  auto fail = [&] {
    throw GridError("grade '" + text + "' is not an exact point on the chain 0..1 with " +
                    std::to_string(chain.n) + " steps");
  };
  std::int64_t p = 0, q = 1;
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!parse_int(text, &p)) fail();
  } else {
    if (!parse_int(text.substr(0, slash), &p) ||
        !parse_int(text.substr(slash + 1), &q) || q == 0) {
      fail();
    }
  }
  // p/q must equal k/n exactly for some integer k in range.
  std::int64_t num = p * chain.n;
  if (num % q != 0) fail();
  std::int64_t k = num / q;
  if (!chain.contains(static_cast<Grade>(k))) fail();
  return static_cast<Grade>(k);
}

Grade grade_from_double(GradeChain chain, double value) {
  double scaled = value * chain.n;
  double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-9 || rounded < 0 || rounded > chain.n) {
    throw GridError("grade " + std::to_string(value) +
                    " is not an exact point on the chain 0..1 with " +
                    std::to_string(chain.n) + " steps");
  }
  return static_cast<Grade>(rounded);
}

bool pointwise_leq(const GradeVec& a, const GradeVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

GradeVec pointwise_min(const GradeVec& a, const GradeVec& b) {
  GradeVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

}  // namespace macl
