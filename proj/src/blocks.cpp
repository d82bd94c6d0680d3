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

#include "macl/blocks.hpp"

#include <algorithm>
#include <set>

namespace macl {

namespace {

bool in_sorted(const std::vector<int>& xs, int x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

std::vector<int> sorted_unique(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool is_bound(const Lattice& lat, int x) {
  return x == lat.bottom() || x == lat.top();
}

// Smallest block closure seed -> members; returns all of L when no block
// contains the seed. Bounds enter only as forced meets/joins.
std::vector<int> block_closure(const Lattice& lat, int seed) {
  std::vector<char> in(lat.size(), 0);
  std::vector<int> work{seed};
  in[seed] = 1;
  std::vector<int> members{seed};
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    auto push = [&](int y) {
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
        work.push_back(y);
      }
    };
    if (!is_bound(lat, x)) {
      for (int y : lat.up_set(x)) {
        if (!is_bound(lat, y)) push(y);
      }
      for (int y : lat.down_set(x)) {
        if (!is_bound(lat, y)) push(y);
      }
    }
    // index loop: members grows while we scan, and every new element gets
    // its own worklist pass anyway
    for (std::size_t i = 0; i < members.size(); ++i) {
      int y = members[i];
      push(lat.meet(x, y));
      push(lat.join(x, y));
    }
  }
  return sorted_unique(std::move(members));
}

Block make_block(const Lattice& lat, std::vector<int> members) {
  Block b;
  b.carrier = &lat;
  b.members = std::move(members);
  b.complete = in_sorted(b.members, lat.bottom()) &&
               in_sorted(b.members, lat.top());
  return b;
}

}  // namespace

bool Block::contains(int x) const { return in_sorted(members, x); }

BlockCheck is_block(const Lattice& lat, const std::vector<int>& members) {
  for (int x : members) {
    if (x < 0 || x >= lat.size()) {
      throw UnknownElement("block member index out of range");
    }
  }
  std::vector<int> ms = sorted_unique(members);
  BlockCheck check;

  if (static_cast<int>(ms.size()) >= lat.size()) {
    check.violation = BlockCheck::Violation::NotProperSubset;
    check.detail = "not a proper subset: every element is a member";
    return check;
  }
  bool nontrivial = false;
  for (int x : ms) {
    if (!is_bound(lat, x)) {
      nontrivial = true;
      break;
    }
  }
  if (!nontrivial) {
    check.violation = BlockCheck::Violation::Trivial;
    check.detail = "no member besides the bounds";
    return check;
  }
  for (int x : ms) {
    for (int y : ms) {
      if (y < x) continue;
      int m = lat.meet(x, y), j = lat.join(x, y);
      if (!in_sorted(ms, m) || !in_sorted(ms, j)) {
        int missing = !in_sorted(ms, m) ? m : j;
        check.violation = BlockCheck::Violation::NotSublattice;
        check.detail = "not a sublattice: " +
                       std::string(!in_sorted(ms, m) ? "meet" : "join") +
                       "(" + lat.label(x) + ", " + lat.label(y) + ") = " +
                       lat.label(missing) + " is missing";
        return check;
      }
    }
  }
  for (int x : ms) {
    if (is_bound(lat, x)) continue;
    for (int y : lat.up_set(x)) {
      if (!is_bound(lat, y) && !in_sorted(ms, y)) {
        check.violation = BlockCheck::Violation::NotUpDownClosed;
        check.detail = "up-set of " + lat.label(x) + " leaks: " +
                       lat.label(y) + " is missing";
        return check;
      }
    }
    for (int y : lat.down_set(x)) {
      if (!is_bound(lat, y) && !in_sorted(ms, y)) {
        check.violation = BlockCheck::Violation::NotUpDownClosed;
        check.detail = "down-set of " + lat.label(x) + " leaks: " +
                       lat.label(y) + " is missing";
        return check;
      }
    }
  }
  check.ok = true;
  return check;
}

BlockCheck is_block(const Lattice& lat,
                    const std::vector<std::string>& member_labels) {
  std::vector<int> members;
  members.reserve(member_labels.size());
  for (const auto& label : member_labels) {
    members.push_back(lat.index_of(label));
  }
  return is_block(lat, members);
}

Block minimal_block_of(const Lattice& lat, int k) {
  if (k < 0 || k >= lat.size()) {
    throw UnknownElement("element index out of range");
  }
  if (is_bound(lat, k)) {
    throw BoundElement("'" + lat.label(k) +
                       "' is a bound; blocks are seeded from inner elements");
  }
  std::vector<int> members = block_closure(lat, k);
  if (static_cast<int>(members.size()) == lat.size()) {
    throw WholeLattice("the smallest block candidate containing '" +
                       lat.label(k) + "' is the whole lattice");
  }
  Block b = make_block(lat, std::move(members));
  // The closure of any member is forced into every block containing it, so
  // the closure is minimal exactly when all member closures coincide.
  b.minimal = true;
  for (int x : b.members) {
    if (!is_bound(lat, x) && block_closure(lat, x) != b.members) {
      b.minimal = false;
      break;
    }
  }
  return b;
}

std::vector<Block> enumerate_minimal_blocks(const Lattice& lat) {
  std::set<std::vector<int>> seen;
  std::vector<Block> out;
  for (int k = 0; k < lat.size(); ++k) {
    if (is_bound(lat, k)) continue;
    std::vector<int> members = block_closure(lat, k);
    if (static_cast<int>(members.size()) == lat.size()) {
      throw NoBlocks("no block contains '" + lat.label(k) +
                     "'; the lattice has no blocks");
    }
    if (seen.insert(members).second) {
      out.push_back(make_block(lat, std::move(members)));
    }
  }
  // closures of members of a closure coincide with it, so everything here
  // is minimal; mark and defensively verify pairwise incomparability
  for (auto& b : out) {
    b.minimal = true;
    for (const auto& other : out) {
      if (&other != &b &&
          std::includes(b.members.begin(), b.members.end(),
                        other.members.begin(), other.members.end())) {
        b.minimal = false;
      }
    }
  }
  std::erase_if(out, [](const Block& b) { return !b.minimal; });
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
    return a.members < b.members;
  });
  return out;
}

std::vector<Block> enumerate_blocks(const Lattice& lat) {
  std::vector<Block> minimal;
  try {
    minimal = enumerate_minimal_blocks(lat);
  } catch (const NoBlocks&) {
    return {};
  }
  const int m = static_cast<int>(minimal.size());
  if (m > 16) {
    throw TooLarge("too many minimal blocks to enumerate unions: " +
                   std::to_string(m));
  }
  const int bounds[2] = {lat.bottom(), lat.top()};
  std::set<std::vector<int>> seen;
  std::vector<Block> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> base;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        base.insert(base.end(), minimal[i].members.begin(),
                    minimal[i].members.end());
      }
    }
    for (unsigned extra = 0; extra < 4; ++extra) {
      std::vector<int> candidate = base;
      if (extra & 1) candidate.push_back(bounds[0]);
      if (extra & 2) candidate.push_back(bounds[1]);
      candidate = sorted_unique(std::move(candidate));
      if (!seen.insert(candidate).second) continue;
      if (is_block(lat, candidate).ok) {
        out.push_back(make_block(lat, std::move(candidate)));
      }
    }
  }
  for (auto& b : out) {
    b.minimal = std::any_of(minimal.begin(), minimal.end(),
                            [&](const Block& mb) {
                              return mb.members == b.members;
                            });
  }
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
    return a.members < b.members;
  });
  return out;
}

PairClassification classify_pair(const Block& k1, const Block& k2) {
  if (k1.carrier == nullptr || k1.carrier != k2.carrier) {
    throw DifferentCarrier("blocks live on different lattices");
  }
  const Lattice& lat = *k1.carrier;
  PairClassification result;
  std::set_intersection(k1.members.begin(), k1.members.end(),
                        k2.members.begin(), k2.members.end(),
                        std::back_inserter(result.intersection));
  bool only_bounds = std::all_of(
      result.intersection.begin(), result.intersection.end(),
      [&](int x) { return is_bound(lat, x); });
  if (only_bounds) {
    result.independent = true;
    result.intersection.clear();
    return result;
  }
  BlockCheck check = is_block(lat, result.intersection);
  if (!check.ok) {
    throw CertificationFailure(
        "non-independent block intersection failed certification: " +
        check.detail);
  }
  return result;
}

Block union_blocks(const std::vector<Block>& blocks) {
  if (blocks.empty()) {
    throw NoCompleteBlock("union of an empty block family");
  }
  const Lattice* carrier = blocks.front().carrier;
  bool any_complete = false;
  std::vector<int> members;
  for (const Block& b : blocks) {
    if (b.carrier != carrier || carrier == nullptr) {
      throw DifferentCarrier("blocks live on different lattices");
    }
    any_complete = any_complete || b.complete;
    members.insert(members.end(), b.members.begin(), b.members.end());
  }
  if (!any_complete) {
    throw NoCompleteBlock(
        "union needs at least one complete block in the family");
  }
  members = sorted_unique(std::move(members));
  if (static_cast<int>(members.size()) == carrier->size()) {
    throw UnionIsWholeLattice("union of the blocks is the whole lattice");
  }
  BlockCheck check = is_block(*carrier, members);
  if (!check.ok) {
    throw CertificationFailure("block union failed certification: " +
                               check.detail);
  }
  Block out = make_block(*carrier, std::move(members));
  return out;
}

Block complement_block(const Block& k) {
  if (k.carrier == nullptr) {
    throw DifferentCarrier("block has no carrier lattice");
  }
  const Lattice& lat = *k.carrier;
  std::vector<int> members{lat.bottom(), lat.top()};
  bool outside = false;
  for (int x = 0; x < lat.size(); ++x) {
    if (!k.contains(x)) {
      members.push_back(x);
      if (!is_bound(lat, x)) outside = true;
    }
  }
  if (!outside) {
    throw ComplementTrivial(
        "nothing besides the bounds lies outside the block");
  }
  members = sorted_unique(std::move(members));
  BlockCheck check = is_block(lat, members);
  if (!check.ok) {
    throw CertificationFailure("complement failed certification: " +
                               check.detail);
  }
  return make_block(lat, std::move(members));
}

std::vector<BlockDecomposition> enumerate_block_decompositions(
    const Lattice& lat) {
  std::vector<Block> minimal;
  try {
    minimal = enumerate_minimal_blocks(lat);
  } catch (const NoBlocks&) {
    return {};
  }
  const int m = static_cast<int>(minimal.size());
  if (m > 12) {
    throw TooLarge("too many minimal blocks for set-partition enumeration: " +
                   std::to_string(m));
  }

  std::vector<BlockDecomposition> out;
  // set partitions via restricted growth strings: minimal block i joins
  // group rgs[i] <= 1 + max(rgs[0..i-1])
  std::vector<int> rgs(m, 0);
  while (true) {
    int groups = m == 0 ? 0 : 1 + *std::max_element(rgs.begin(), rgs.end());
    if (groups >= 2) {
      std::vector<std::vector<int>> members(groups,
                                            {lat.bottom(), lat.top()});
      for (int i = 0; i < m; ++i) {
        members[rgs[i]].insert(members[rgs[i]].end(),
                               minimal[i].members.begin(),
                               minimal[i].members.end());
      }
      bool all_blocks = true;
      BlockDecomposition dec;
      for (auto& group : members) {
        group = sorted_unique(std::move(group));
        if (!is_block(lat, group).ok) {
          all_blocks = false;
          break;
        }
        dec.blocks.push_back(make_block(lat, std::move(group)));
      }
      if (all_blocks) {
        std::sort(dec.blocks.begin(), dec.blocks.end(),
                  [](const Block& a, const Block& b) {
                    return a.members < b.members;
                  });
        out.push_back(std::move(dec));
      }
    }
    // advance the growth string
    int i = m - 1;
    for (; i > 0; --i) {
      int cap = 1 + *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] < cap) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }

  std::sort(out.begin(), out.end(),
            [](const BlockDecomposition& a, const BlockDecomposition& b) {
              std::vector<std::vector<int>> am, bm;
              for (const auto& x : a.blocks) am.push_back(x.members);
              for (const auto& x : b.blocks) bm.push_back(x.members);
              return am < bm;
            });
  return out;
}

}  // namespace macl
