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

#include "macl/concepts.hpp"

#include <algorithm>
#include <map>

namespace macl {

GradeVec derive_up(const Context& ctx, const GradeVec& g) {
  if (static_cast<int>(g.size()) != ctx.n_objects()) {
    throw InvalidContext("object fuzzy set has the wrong arity");
  }
  GradeVec f(ctx.n_attributes());
  for (int a = 0; a < ctx.n_attributes(); ++a) {
    Grade acc = ctx.chain().top();
    for (int b = 0; b < ctx.n_objects(); ++b) {
      acc = std::min(acc, ctx.triple_at(a, b).res_left(ctx.relation(a, b),
                                                       g[b]));
    }
    f[a] = acc;
  }
  return f;
}

GradeVec derive_down(const Context& ctx, const GradeVec& f) {
  if (static_cast<int>(f.size()) != ctx.n_attributes()) {
    throw InvalidContext("attribute fuzzy set has the wrong arity");
  }
  GradeVec g(ctx.n_objects());
  for (int b = 0; b < ctx.n_objects(); ++b) {
    Grade acc = ctx.chain().top();
    for (int a = 0; a < ctx.n_attributes(); ++a) {
      acc = std::min(acc, ctx.triple_at(a, b).res_right(ctx.relation(a, b),
                                                        f[a]));
    }
    g[b] = acc;
  }
  return g;
}

GradeVec fuzzy_attribute_extent(const Context& ctx, int a, Grade x) {
  if (a < 0 || a >= ctx.n_attributes()) {
    throw UnknownAttribute("attribute index out of range");
  }
  if (!ctx.chain().contains(x)) {
    throw GridError("grade off the chain");
  }
  // downward derivation of the fuzzy attribute collapses to one row:
  // other attributes contribute res_right(_, bottom) = top to the min
  GradeVec g(ctx.n_objects());
  for (int b = 0; b < ctx.n_objects(); ++b) {
    g[b] = ctx.triple_at(a, b).res_right(ctx.relation(a, b), x);
  }
  return g;
}

FormalConcept fuzzy_attribute_concept(const Context& ctx, int a, Grade x) {
  FormalConcept c;
  c.extent = fuzzy_attribute_extent(ctx, a, x);
  c.intent = derive_up(ctx, c.extent);
  return c;
}

FormalConcept fuzzy_object_concept(const Context& ctx, int b, Grade y) {
  if (b < 0 || b >= ctx.n_objects()) {
    throw UnknownObject("object index out of range");
  }
  if (!ctx.chain().contains(y)) {
    throw GridError("grade off the chain");
  }
  FormalConcept c;
  // upward derivation of the fuzzy object, one column
  c.intent.resize(ctx.n_attributes());
  for (int a = 0; a < ctx.n_attributes(); ++a) {
    c.intent[a] = ctx.triple_at(a, b).res_left(ctx.relation(a, b), y);
  }
  c.extent = derive_down(ctx, c.intent);
  return c;
}

bool ConceptLattice::leq(int c, int d) const {
  return pointwise_leq(concepts_[c].extent, concepts_[d].extent);
}

int ConceptLattice::find_extent(const GradeVec& extent) const {
  auto it = std::lower_bound(concepts_.begin(), concepts_.end(), extent,
                             [](const FormalConcept& c, const GradeVec& e) {
                               return c.extent < e;
                             });
  if (it == concepts_.end() || it->extent != extent) return -1;
  return static_cast<int>(it - concepts_.begin());
}

int ConceptLattice::index_of_extent(const GradeVec& extent) const {
  int c = find_extent(extent);
  if (c < 0) {
    throw UnknownConcept("no concept carries the given extent");
  }
  return c;
}

std::vector<int> ConceptLattice::meet_irreducibles() const {
  std::vector<int> cover_count(size(), 0);
  for (const auto& [lo, hi] : covers_) ++cover_count[lo];
  std::vector<int> out;
  for (int c = 0; c < size(); ++c) {
    if (c != top() && cover_count[c] == 1) out.push_back(c);
  }
  return out;
}

Lattice ConceptLattice::order_lattice() const {
  std::vector<std::string> labels(size());
  std::vector<std::uint8_t> order(static_cast<std::size_t>(size()) * size());
  for (int c = 0; c < size(); ++c) {
    labels[c] = "C" + std::to_string(c);
    for (int d = 0; d < size(); ++d) {
      order[c * size() + d] = leq(c, d) ? 1 : 0;
    }
  }
  return Lattice::from_order(std::move(labels), std::move(order));
}

ConceptLattice enumerate_concepts(const Context& ctx) {
  const GradeChain chain = ctx.chain();

  // meet closure of the fuzzy attribute extents, seeded with the full
  // extent (the top concept); extents of concepts are exactly the meets of
  // fuzzy attribute extents
  std::map<GradeVec, int> seen;
  std::vector<GradeVec> extents;
  auto add = [&](GradeVec e) {
    if (seen.emplace(e, static_cast<int>(extents.size())).second) {
      extents.push_back(std::move(e));
    }
  };
  add(GradeVec(ctx.n_objects(), chain.top()));
  for (int a = 0; a < ctx.n_attributes(); ++a) {
    for (Grade x = 1; x <= chain.n; ++x) {
      add(fuzzy_attribute_extent(ctx, a, x));
    }
  }
  for (std::size_t i = 0; i < extents.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      add(pointwise_min(extents[i], extents[j]));
    }
  }

  ConceptLattice lat;
  std::sort(extents.begin(), extents.end());
  lat.concepts_.reserve(extents.size());
  for (GradeVec& e : extents) {
    FormalConcept c;
    c.intent = derive_up(ctx, e);
    c.extent = std::move(e);
    lat.concepts_.push_back(std::move(c));
  }

  const int n = lat.size();
  lat.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  lat.join_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int c = 0; c < n; ++c) {
    for (int d = c; d < n; ++d) {
      int m = lat.find_extent(
          pointwise_min(lat.concepts_[c].extent, lat.concepts_[d].extent));
      if (m < 0) {
        throw CertificationFailure(
            "extent set is not closed under pointwise minimum");
      }
      lat.meet_[c * n + d] = lat.meet_[d * n + c] = m;
    }
  }
  for (int c = 0; c < n; ++c) {
    for (int d = c; d < n; ++d) {
      // least common upper bound; unique because extents are meet-closed
      int best = -1;
      for (int u = 0; u < n; ++u) {
        if (lat.leq(c, u) && lat.leq(d, u) &&
            (best == -1 || lat.leq(u, best))) {
          best = u;
        }
      }
      for (int u = 0; u < n; ++u) {
        if (lat.leq(c, u) && lat.leq(d, u) && !lat.leq(best, u)) {
          throw CertificationFailure("concept join is not unique");
        }
      }
      lat.join_[c * n + d] = lat.join_[d * n + c] = best;
    }
  }
  for (int c = 0; c < n; ++c) {
    for (int d = 0; d < n; ++d) {
      if (c == d || !lat.leq(c, d)) continue;
      bool cover = true;
      for (int e = 0; e < n && cover; ++e) {
        if (e != c && e != d && lat.leq(c, e) && lat.leq(e, d)) cover = false;
      }
      if (cover) lat.covers_.emplace_back(c, d);
    }
  }
  std::sort(lat.covers_.begin(), lat.covers_.end());
  return lat;
}

std::vector<IrreducibleConcept> meet_irreducible_concepts(
    const Context& ctx, const ConceptLattice& lat) {
  const GradeChain chain = ctx.chain();

  // group the fuzzy attribute generators by their extent
  std::map<GradeVec, std::vector<std::pair<int, Grade>>> generators;
  for (int a = 0; a < ctx.n_attributes(); ++a) {
    for (Grade x = 1; x <= chain.n; ++x) {
      generators[fuzzy_attribute_extent(ctx, a, x)].emplace_back(a, x);
    }
  }

  const GradeVec full(ctx.n_objects(), chain.top());
  std::vector<IrreducibleConcept> out;
  for (const auto& [extent, gens] : generators) {
    if (extent == full) continue;  // the top concept is never irreducible
    // meet of the strictly larger fuzzy attribute extents
    GradeVec meet = full;
    for (const auto& [other, _] : generators) {
      if (other != extent && pointwise_leq(extent, other)) {
        meet = pointwise_min(meet, other);
      }
    }
    if (meet != extent) {
      IrreducibleConcept ic;
      ic.concept_index = lat.index_of_extent(extent);
      ic.generators = gens;
      out.push_back(std::move(ic));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IrreducibleConcept& a, const IrreducibleConcept& b) {
              return a.concept_index < b.concept_index;
            });
  return out;
}

std::pair<std::vector<int>, std::vector<int>> irreducible_index_sets(
    const Context& ctx, const ConceptLattice& lat,
    const std::vector<int>& attrs, int c) {
  if (c < 0 || c >= lat.size()) {
    throw UnknownConcept("concept index out of range");
  }
  std::vector<char> in_attrs(ctx.n_attributes(), 0);
  for (int a : attrs) {
    if (a < 0 || a >= ctx.n_attributes()) {
      throw UnknownAttribute("attribute index out of range");
    }
    in_attrs[a] = 1;
  }
  std::vector<int> m_f, m_c;
  for (const IrreducibleConcept& ic : meet_irreducible_concepts(ctx, lat)) {
    bool generated_inside = std::any_of(
        ic.generators.begin(), ic.generators.end(),
        [&](const std::pair<int, Grade>& g) { return in_attrs[g.first]; });
    if (!generated_inside) continue;
    m_f.push_back(ic.concept_index);
    if (lat.leq(c, ic.concept_index)) m_c.push_back(ic.concept_index);
  }
  return {std::move(m_f), std::move(m_c)};
}

RepresentationCheck check_representation(const Context& ctx, int a, Grade x,
                                         int b, Grade y) {
  RepresentationCheck check;
  FormalConcept lower = fuzzy_object_concept(ctx, b, y);
  FormalConcept upper = fuzzy_attribute_concept(ctx, a, x);
  check.lhs = pointwise_leq(lower.extent, upper.extent);
  check.rhs = ctx.triple_at(a, b).conj(x, y) <= ctx.relation(a, b);
  return check;
}

}  // namespace macl
