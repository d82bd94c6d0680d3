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

#include "macl/oracle.hpp"

#include <algorithm>

namespace macl {
namespace oracle {

namespace {

// Definition check on an explicit member bitmask, nothing shared with the
// production path.
bool satisfies_block_definition(const Lattice& lat, unsigned mask) {
  const int n = lat.size();
  const unsigned full = (n == 32 ? ~0u : (1u << n) - 1);
  if (mask == 0 || mask == full) return false;
  auto in = [&](int x) { return (mask >> x) & 1u; };

  bool inner = false;
  for (int x = 0; x < n; ++x) {
    if (in(x) && x != lat.bottom() && x != lat.top()) inner = true;
  }
  if (!inner) return false;

  for (int x = 0; x < n; ++x) {
    if (!in(x)) continue;
    for (int y = x; y < n; ++y) {
      if (!in(y)) continue;
      if (!in(lat.meet(x, y)) || !in(lat.join(x, y))) return false;
    }
  }
  for (int x = 0; x < n; ++x) {
    if (!in(x) || x == lat.bottom() || x == lat.top()) continue;
    for (int y = 0; y < n; ++y) {
      if (y == lat.bottom() || y == lat.top() || in(y)) continue;
      if (lat.leq(x, y) || lat.leq(y, x)) return false;
    }
  }
  return true;
}

std::vector<int> mask_to_members(unsigned mask, int n) {
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if ((mask >> x) & 1u) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> brute_blocks(const Lattice& lat) {
  const int n = lat.size();
  if (n > 16) {
    throw TooLarge("powerset block scan beyond 16 elements");
  }
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (satisfies_block_definition(lat, mask)) {
      out.push_back(mask_to_members(mask, n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> brute_minimal_blocks(const Lattice& lat) {
  std::vector<std::vector<int>> blocks = brute_blocks(lat);
  std::vector<std::vector<int>> out;
  for (const auto& b : blocks) {
    bool minimal = true;
    for (const auto& other : blocks) {
      if (other != b && std::includes(b.begin(), b.end(), other.begin(),
                                      other.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(b);
  }
  return out;
}

std::vector<int> brute_meet_irreducibles(const Lattice& lat) {
  std::vector<int> out;
  for (int x = 0; x < lat.size(); ++x) {
    if (x == lat.top()) continue;
    bool irreducible = true;
    for (int y = 0; y < lat.size() && irreducible; ++y) {
      for (int z = 0; z < lat.size() && irreducible; ++z) {
        if (lat.meet(y, z) == x && y != x && z != x) irreducible = false;
      }
    }
    if (irreducible) out.push_back(x);
  }
  return out;
}

std::vector<FormalConcept> brute_concepts(const Context& ctx) {
  const int nb = ctx.n_objects();
  const int m = ctx.chain().size();
  double space = 1;
  for (int b = 0; b < nb; ++b) space *= m;
  if (space > 1e6) {
    throw TooLarge("concept scan beyond 10^6 candidate extents");
  }

  // local derivations, written out against the triple tables directly
  auto up = [&](const GradeVec& g) {
    GradeVec f(ctx.n_attributes());
    for (int a = 0; a < ctx.n_attributes(); ++a) {
      Grade acc = ctx.chain().top();
      for (int b = 0; b < nb; ++b) {
        Grade r = ctx.triple_at(a, b).res_left(ctx.relation(a, b), g[b]);
        if (r < acc) acc = r;
      }
      f[a] = acc;
    }
    return f;
  };
  auto down = [&](const GradeVec& f) {
    GradeVec g(nb);
    for (int b = 0; b < nb; ++b) {
      Grade acc = ctx.chain().top();
      for (int a = 0; a < ctx.n_attributes(); ++a) {
        Grade r = ctx.triple_at(a, b).res_right(ctx.relation(a, b), f[a]);
        if (r < acc) acc = r;
      }
      g[b] = acc;
    }
    return g;
  };

  std::vector<FormalConcept> out;
  GradeVec g(nb, 0);
  while (true) {
    GradeVec f = up(g);
    if (down(f) == g) {
      out.push_back({g, f});
    }
    int b = 0;
    while (b < nb && g[b] == ctx.chain().n) {
      g[b] = 0;
      ++b;
    }
    if (b == nb) break;
    ++g[b];
  }
  std::sort(out.begin(), out.end(),
            [](const FormalConcept& a, const FormalConcept& b) {
              return a.extent < b.extent;
            });
  return out;
}

namespace {

// All set partitions of {0..n-1} as part-index assignments.
std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    out.push_back(rgs);
    int i = n - 1;
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
  return out;
}

}  // namespace

std::vector<SubcontextDecomposition> brute_decompositions(const Context& ctx) {
  const int na = ctx.n_attributes(), nb = ctx.n_objects();
  if (na > 5 || nb > 5) {
    throw TooLarge("partition-pair scan beyond 5 attributes or objects");
  }

  std::vector<SubcontextDecomposition> out;
  for (const auto& pa : all_partitions(na)) {
    const int ka = 1 + *std::max_element(pa.begin(), pa.end());
    if (ka < 2) continue;
    for (const auto& pb : all_partitions(nb)) {
      const int kb = 1 + *std::max_element(pb.begin(), pb.end());
      if (kb != ka) continue;
      // every pairing of attribute parts with object parts
      std::vector<int> perm(ka);
      for (int i = 0; i < ka; ++i) perm[i] = i;
      do {
        SubcontextDecomposition dec;
        dec.parts.resize(ka);
        for (int a = 0; a < na; ++a) {
          dec.parts[pa[a]].attributes.push_back(a);
        }
        for (int b = 0; b < nb; ++b) {
          dec.parts[perm[pb[b]]].objects.push_back(b);
        }
        std::sort(dec.parts.begin(), dec.parts.end());

        // direct definition check against R and sigma
        bool ok = true;
        for (const auto& part : dec.parts) {
          if (part.attributes.empty() || part.objects.empty()) {
            ok = false;
            break;
          }
          bool nonzero = false;
          for (int a : part.attributes) {
            for (int b : part.objects) {
              if (ctx.relation(a, b) != 0) nonzero = true;
            }
          }
          if (!nonzero) ok = false;
        }
        if (ok) {
          std::vector<int> part_of_attr(na), part_of_obj(nb);
          for (std::size_t p = 0; p < dec.parts.size(); ++p) {
            for (int a : dec.parts[p].attributes) {
              part_of_attr[a] = static_cast<int>(p);
            }
            for (int b : dec.parts[p].objects) {
              part_of_obj[b] = static_cast<int>(p);
            }
          }
          for (int a = 0; a < na && ok; ++a) {
            for (int b = 0; b < nb && ok; ++b) {
              if (part_of_attr[a] != part_of_obj[b]) {
                if (ctx.relation(a, b) != 0) ok = false;
                const AdjointTriple& t = ctx.triple_at(a, b);
                bool zero_divisors = false;
                for (Grade x = 1; x <= ctx.chain().n && !zero_divisors; ++x) {
                  for (Grade y = 1; y <= ctx.chain().n; ++y) {
                    if (t.conj(x, y) == 0) {
                      zero_divisors = true;
                      break;
                    }
                  }
                }
                if (zero_divisors) ok = false;
              }
            }
          }
        }
        if (ok && std::find(out.begin(), out.end(), dec) == out.end()) {
          out.push_back(dec);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::vector<Grade>, std::vector<Grade>> residua_by_scan(
    GradeChain chain, const std::vector<Grade>& conj) {
  const int m = chain.size();
  if (conj.size() != static_cast<std::size_t>(m) * m) {
    throw GridError("conjunctor table size mismatch");
  }
  std::vector<Grade> left(conj.size()), right(conj.size());
  for (Grade z = 0; z < m; ++z) {
    for (Grade u = 0; u < m; ++u) {
      Grade best_x = -1, best_y = -1;
      for (Grade v = 0; v < m; ++v) {
        if (conj[v * m + u] <= z) best_x = v;  // conj(v, u) <= z
        if (conj[u * m + v] <= z) best_y = v;  // conj(u, v) <= z
      }
      if (best_x < 0 || best_y < 0) {
        throw NoMaximum("empty residuation set in oracle scan");
      }
      left[z * m + u] = best_x;
      right[z * m + u] = best_y;
    }
  }
  return {left, right};
}

}  // namespace oracle
}  // namespace macl
