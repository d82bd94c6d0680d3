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

#include "macl/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace macl {

namespace {

std::unordered_map<std::string, int> label_index(
    const std::vector<std::string>& labels) {
  std::unordered_map<std::string, int> map;
  map.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = map.emplace(labels[i], static_cast<int>(i));
    if (!inserted) {
      throw DuplicateLabel("duplicate element label '" + labels[i] + "'");
    }
  }
  return map;
}

}  // namespace

Lattice Lattice::from_covers(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  auto index = label_index(labels);
  const int n = static_cast<int>(labels.size());

  std::vector<std::vector<int>> above(n);  // cover edges lower -> upper
  std::vector<int> indegree(n, 0);
  for (const auto& [lo_label, hi_label] : covers) {
    auto lo = index.find(lo_label);
    auto hi = index.find(hi_label);
    if (lo == index.end()) {
      throw UnknownElement("cover references unknown element '" + lo_label +
                           "'");
    }
    if (hi == index.end()) {
      throw UnknownElement("cover references unknown element '" + hi_label +
                           "'");
    }
    if (lo->second == hi->second) {
      throw CyclicCovers("cover relation has a self-loop at '" + lo_label +
                         "'");
    }
    above[lo->second].push_back(hi->second);
    ++indegree[hi->second];
  }

  // Kahn's algorithm; leftovers mean a cycle.
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) queue.push_back(v);
  }
  int seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (int w : above[v]) {
      if (--indegree[w] == 0) queue.push_back(w);
    }
  }
  if (seen != n) {
    throw CyclicCovers("cover relation contains a cycle");
  }

  // reflexive-transitive closure, one depth-first sweep per element
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int v = 0; v < n; ++v) {
    std::vector<int> stack{v};
    leq[v * n + v] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : above[u]) {
        if (!leq[v * n + w]) {
          leq[v * n + w] = 1;
          stack.push_back(w);
        }
      }
    }
  }

  return from_order(std::move(labels), std::move(leq));
}

Lattice Lattice::from_order(std::vector<std::string> labels,
                            std::vector<std::uint8_t> leq) {
  Lattice lat;
  lat.labels_ = std::move(labels);
  lat.leq_ = std::move(leq);
  label_index(lat.labels_);  // reject duplicates
  if (lat.leq_.size() !=
      static_cast<std::size_t>(lat.size()) * lat.size()) {
    throw NotALattice("order relation size mismatch");
  }
  lat.finish_construction();
  return lat;
}

void Lattice::finish_construction() {
  const int n = size();
  if (n < 3) {
    throw TooSmall("lattice needs at least 3 elements, got " +
                   std::to_string(n));
  }

  for (int x = 0; x < n; ++x) {
    if (!leq(x, x)) {
      throw NotALattice("order is not reflexive at '" + label(x) + "'");
    }
    for (int y = 0; y < n; ++y) {
      if (x != y && leq(x, y) && leq(y, x)) {
        throw NotALattice("order is not antisymmetric between '" + label(x) +
                          "' and '" + label(y) + "'");
      }
      for (int z = 0; z < n; ++z) {
        if (leq(x, y) && leq(y, z) && !leq(x, z)) {
          throw NotALattice("order is not transitive through '" + label(y) +
                            "'");
        }
      }
    }
  }

  bottom_ = top_ = -1;
  for (int x = 0; x < n; ++x) {
    bool minimal = true, maximal = true;
    for (int y = 0; y < n; ++y) {
      if (y != x && leq(y, x)) minimal = false;
      if (y != x && leq(x, y)) maximal = false;
    }
    if (minimal) {
      if (bottom_ != -1) {
        throw NotBounded("no unique bottom: both '" + label(bottom_) +
                         "' and '" + label(x) + "' are minimal");
      }
      bottom_ = x;
    }
    if (maximal) {
      if (top_ != -1) {
        throw NotBounded("no unique top: both '" + label(top_) + "' and '" +
                         label(x) + "' are maximal");
      }
      top_ = x;
    }
  }
  for (int x = 0; x < n; ++x) {
    if (!leq(bottom_, x) || !leq(x, top_)) {
      throw NotBounded("element '" + label(x) +
                       "' is not between bottom and top");
    }
  }

  meet_.assign(static_cast<std::size_t>(n) * n, -1);
  join_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      int best = -1;
      for (int z = 0; z < n; ++z) {
        if (leq(z, x) && leq(z, y) && (best == -1 || leq(best, z))) best = z;
      }
      // best is the leq-greatest candidate found in scan order only if it
      // dominates every other lower bound; verify
      for (int z = 0; z < n; ++z) {
        if (leq(z, x) && leq(z, y) && !leq(z, best)) {
          throw NotALattice("elements '" + label(x) + "' and '" + label(y) +
                            "' have no greatest lower bound");
        }
      }
      meet_[x * n + y] = meet_[y * n + x] = best;

      best = -1;
      for (int z = 0; z < n; ++z) {
        if (leq(x, z) && leq(y, z) && (best == -1 || leq(z, best))) best = z;
      }
      for (int z = 0; z < n; ++z) {
        if (leq(x, z) && leq(y, z) && !leq(best, z)) {
          throw NotALattice("elements '" + label(x) + "' and '" + label(y) +
                            "' have no least upper bound");
        }
      }
      join_[x * n + y] = join_[y * n + x] = best;
    }
  }

  covers_.clear();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z) {
        if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
      }
      if (cover) covers_.emplace_back(x, y);
    }
  }
  std::sort(covers_.begin(), covers_.end());

  up_sets_.assign(n, {});
  down_sets_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (leq(x, y)) up_sets_[x].push_back(y);
      if (leq(y, x)) down_sets_[x].push_back(y);
    }
  }
}

int Lattice::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw UnknownElement("unknown element '" + std::string(label) + "'");
}

int Lattice::meet_of(std::span<const int> xs) const {
  int acc = top_;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

int Lattice::join_of(std::span<const int> xs) const {
  int acc = bottom_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

std::vector<int> Lattice::upper_covers(int x) const {
  std::vector<int> out;
  for (const auto& [lo, hi] : covers_) {
    if (lo == x) out.push_back(hi);
  }
  return out;
}

std::vector<int> Lattice::lower_covers(int x) const {
  std::vector<int> out;
  for (const auto& [lo, hi] : covers_) {
    if (hi == x) out.push_back(lo);
  }
  return out;
}

std::vector<int> Lattice::meet_irreducibles() const {
  std::vector<int> count(size(), 0);
  for (const auto& [lo, hi] : covers_) ++count[lo];
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    if (x != top_ && count[x] == 1) out.push_back(x);
  }
  return out;
}

std::vector<int> Lattice::irreducible_decomposition(int x) const {
  if (x < 0 || x >= size()) {
    throw UnknownElement("element index out of range");
  }
  std::vector<int> out;
  for (int m : meet_irreducibles()) {
    if (leq(x, m)) out.push_back(m);
  }
  return out;
}

}  // namespace macl
