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

#include "macl/bridge.hpp"

#include <algorithm>
#include <set>

#include "macl/blocks.hpp"

namespace macl {

namespace {

bool sorted_contains(const std::vector<int>& xs, int x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

// Certifies a family of concept index sets as >= 2 pairwise independent
// blocks of the concept order covering every concept. Returns the failure
// description, or an empty string when the family is a decomposition.
std::string family_violation(const ConceptLattice& lat,
                             const std::vector<std::vector<int>>& blocks) {
  if (blocks.size() < 2) {
    return "a block decomposition needs at least two blocks";
  }
  Lattice order = lat.order_lattice();
  std::vector<char> covered(lat.size(), 0);
  for (const auto& members : blocks) {
    BlockCheck check = is_block(order, members);
    if (!check.ok) {
      return "family member is not a block: " + check.detail;
    }
    for (int c : members) covered[c] = 1;
  }
  if (std::count(covered.begin(), covered.end(), 0) != 0) {
    return "family does not cover the concept lattice";
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      for (int c : blocks[i]) {
        if (c != lat.bottom() && c != lat.top() &&
            sorted_contains(blocks[j], c)) {
          return "blocks " + std::to_string(i) + " and " + std::to_string(j) +
                 " share the inner concept C" + std::to_string(c);
        }
      }
    }
  }
  return "";
}

}  // namespace

std::vector<ConceptBlock> blocks_from_decomposition(
    const Context& ctx, const ConceptLattice& lat,
    const SubcontextDecomposition& dec) {
  DecompositionCheck check = check_decomposition(ctx, dec);
  if (!check.ok) {
    throw InvalidDecomposition("not a decomposition into independent "
                               "subcontexts: " +
                               check.violation);
  }

  std::vector<IrreducibleConcept> irreducibles =
      meet_irreducible_concepts(ctx, lat);

  std::vector<ConceptBlock> out;
  for (const SubcontextPart& part : dec.parts) {
    std::vector<char> inside(ctx.n_attributes(), 0);
    for (int a : part.attributes) inside[a] = 1;

    // irreducibles generated by a fuzzy attribute of this part
    std::vector<int> m_f;
    for (const IrreducibleConcept& ic : irreducibles) {
      if (std::any_of(ic.generators.begin(), ic.generators.end(),
                      [&](const std::pair<int, Grade>& g) {
                        return inside[g.first];
                      })) {
        m_f.push_back(ic.concept_index);
      }
    }

    ConceptBlock block;
    for (int c = 0; c < lat.size(); ++c) {
      // meet of the part's irreducibles above c; empty meet is the top
      GradeVec meet = lat.at(lat.top()).extent;
      for (int m : m_f) {
        if (lat.leq(c, m)) meet = pointwise_min(meet, lat.at(m).extent);
      }
      if (meet == lat.at(c).extent) block.concepts.push_back(c);
    }
    if (!sorted_contains(block.concepts, lat.bottom())) {
      block.concepts.insert(block.concepts.begin(), lat.bottom());
    }
    block.complete = true;
    out.push_back(std::move(block));
  }

  std::vector<std::vector<int>> members;
  for (const auto& b : out) members.push_back(b.concepts);
  std::string violation = family_violation(lat, members);
  if (!violation.empty()) {
    throw CertificationFailure(
        "induced concept blocks failed certification: " + violation);
  }
  return out;
}

std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
partition_from_blocks(const Context& ctx, const ConceptLattice& lat,
                      const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<int>> family;
  family.reserve(blocks.size());
  for (const auto& b : blocks) {
    std::vector<int> members = b;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    family.push_back(std::move(members));
  }
  std::string violation = family_violation(lat, family);
  if (!violation.empty()) {
    throw NotADecomposition(violation);
  }

  const GradeChain chain = ctx.chain();
  std::vector<std::vector<int>> attr_parts(family.size());
  std::vector<std::vector<int>> obj_parts(family.size());
  std::vector<int> attr_home(ctx.n_attributes(), -1);
  std::vector<int> obj_home(ctx.n_objects(), -1);

  auto inner = [&](const std::vector<int>& members, int c) {
    return sorted_contains(members, c) && c != lat.bottom() && c != lat.top();
  };

  for (int a = 0; a < ctx.n_attributes(); ++a) {
    for (Grade x = 1; x <= chain.n; ++x) {
      int c = lat.index_of_extent(fuzzy_attribute_extent(ctx, a, x));
      for (std::size_t k = 0; k < family.size(); ++k) {
        if (!inner(family[k], c)) continue;
        if (attr_home[a] != -1 && attr_home[a] != static_cast<int>(k)) {
          throw PartitionFailure("attribute '" + ctx.attributes()[a] +
                                 "' lands in two different blocks");
        }
        if (attr_home[a] == -1) {
          attr_home[a] = static_cast<int>(k);
          attr_parts[k].push_back(a);
        }
      }
    }
    if (attr_home[a] == -1) {
      throw PartitionFailure("attribute '" + ctx.attributes()[a] +
                             "' lands in no block");
    }
  }
  for (int b = 0; b < ctx.n_objects(); ++b) {
    for (Grade y = 1; y <= chain.n; ++y) {
      int c = lat.index_of_extent(fuzzy_object_concept(ctx, b, y).extent);
      for (std::size_t k = 0; k < family.size(); ++k) {
        if (!inner(family[k], c)) continue;
        if (obj_home[b] != -1 && obj_home[b] != static_cast<int>(k)) {
          throw PartitionFailure("object '" + ctx.objects()[b] +
                                 "' lands in two different blocks");
        }
        if (obj_home[b] == -1) {
          obj_home[b] = static_cast<int>(k);
          obj_parts[k].push_back(b);
        }
      }
    }
    if (obj_home[b] == -1) {
      throw PartitionFailure("object '" + ctx.objects()[b] +
                             "' lands in no block");
    }
  }
  return {std::move(attr_parts), std::move(obj_parts)};
}

SubcontextDecomposition subcontexts_from_blocks(
    const Context& ctx, const ConceptLattice& lat,
    const std::vector<std::vector<int>>& blocks) {
  auto [attr_parts, obj_parts] = partition_from_blocks(ctx, lat, blocks);
  SubcontextDecomposition dec;
  for (std::size_t k = 0; k < attr_parts.size(); ++k) {
    dec.parts.push_back({std::move(attr_parts[k]), std::move(obj_parts[k])});
  }
  std::sort(dec.parts.begin(), dec.parts.end());
  DecompositionCheck check = check_decomposition(ctx, dec);
  if (!check.ok) {
    throw CertificationFailure("recovered subcontexts failed "
                               "re-certification: " +
                               check.violation);
  }
  return dec;
}

EquivalenceReport verify_equivalence(const Context& ctx) {
  EquivalenceReport report;
  auto add_check = [&](const std::string& name, bool pass,
                       const std::string& detail) {
    report.checks.push_back({name, pass, pass ? "" : detail});
  };

  std::vector<SubcontextDecomposition> ctx_decs =
      enumerate_decompositions(ctx);
  ConceptLattice lat = enumerate_concepts(ctx);

  std::vector<std::vector<std::vector<int>>> block_decs;
  if (lat.size() >= 3) {
    Lattice order = lat.order_lattice();
    for (const BlockDecomposition& dec :
         enumerate_block_decompositions(order)) {
      std::vector<std::vector<int>> family;
      for (const Block& b : dec.blocks) family.push_back(b.members);
      block_decs.push_back(std::move(family));
    }
  }
  report.context_decompositions = static_cast<int>(ctx_decs.size());
  report.block_decompositions = static_cast<int>(block_decs.size());

  add_check("sides-empty-together",
            ctx_decs.empty() == block_decs.empty(),
            ctx_decs.empty() ? "only the lattice side decomposes"
                             : "only the context side decomposes");

  bool forward_ok = true;
  std::string forward_detail;
  for (std::size_t i = 0; i < ctx_decs.size() && forward_ok; ++i) {
    std::vector<std::vector<int>> family;
    for (const ConceptBlock& b :
         blocks_from_decomposition(ctx, lat, ctx_decs[i])) {
      family.push_back(b.concepts);
    }
    std::sort(family.begin(), family.end());
    auto it = std::find(block_decs.begin(), block_decs.end(), family);
    if (it == block_decs.end()) {
      forward_ok = false;
      forward_detail = "image of context decomposition " + std::to_string(i) +
                       " is missing from the block enumeration";
      break;
    }
    report.forward_matches.emplace_back(
        static_cast<int>(i), static_cast<int>(it - block_decs.begin()));
    if (subcontexts_from_blocks(ctx, lat, family) != ctx_decs[i]) {
      forward_ok = false;
      forward_detail = "round trip through blocks loses decomposition " +
                       std::to_string(i);
    }
  }
  add_check("forward-images-enumerated-and-invertible", forward_ok,
            forward_detail);

  bool backward_ok = true;
  std::string backward_detail;
  for (std::size_t k = 0; k < block_decs.size() && backward_ok; ++k) {
    SubcontextDecomposition dec;
    try {
      dec = subcontexts_from_blocks(ctx, lat, block_decs[k]);
    } catch (const Error& e) {
      backward_ok = false;
      backward_detail = "block decomposition " + std::to_string(k) +
                        " recovers no context decomposition: " + e.what();
      break;
    }
    auto it = std::find(ctx_decs.begin(), ctx_decs.end(), dec);
    if (it == ctx_decs.end()) {
      backward_ok = false;
      backward_detail = "preimage of block decomposition " +
                        std::to_string(k) +
                        " is missing from the context enumeration";
      break;
    }
    report.backward_matches.emplace_back(
        static_cast<int>(k), static_cast<int>(it - ctx_decs.begin()));
    std::vector<std::vector<int>> family;
    for (const ConceptBlock& b : blocks_from_decomposition(ctx, lat, dec)) {
      family.push_back(b.concepts);
    }
    std::sort(family.begin(), family.end());
    std::vector<std::vector<int>> given = block_decs[k];
    std::sort(given.begin(), given.end());
    if (family != given) {
      backward_ok = false;
      backward_detail = "round trip through subcontexts loses block "
                        "decomposition " +
                        std::to_string(k);
    }
  }
  add_check("backward-images-enumerated-and-invertible", backward_ok,
            backward_detail);

  bool finest_ok = true;
  std::string finest_detail;
  if (!ctx_decs.empty() && !block_decs.empty()) {
    auto finest_ctx = std::max_element(
        ctx_decs.begin(), ctx_decs.end(),
        [](const SubcontextDecomposition& a, const SubcontextDecomposition& b) {
          return a.parts.size() < b.parts.size();
        });
    auto finest_blocks = std::max_element(
        block_decs.begin(), block_decs.end(),
        [](const std::vector<std::vector<int>>& a,
           const std::vector<std::vector<int>>& b) {
          return a.size() < b.size();
        });
    std::vector<std::vector<int>> family;
    for (const ConceptBlock& b :
         blocks_from_decomposition(ctx, lat, *finest_ctx)) {
      family.push_back(b.concepts);
    }
    std::sort(family.begin(), family.end());
    if (family != *finest_blocks) {
      finest_ok = false;
      finest_detail = "finest context decomposition does not map onto the "
                      "finest block decomposition";
    } else if (subcontexts_from_blocks(ctx, lat, *finest_blocks) !=
               *finest_ctx) {
      finest_ok = false;
      finest_detail = "finest block decomposition does not recover the "
                      "finest context decomposition";
    }
  }
  add_check("finest-mutually-inverse", finest_ok, finest_detail);

  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const EquivalenceReport::Check& c) {
                              return c.pass;
                            });
  return report;
}

}  // namespace macl
