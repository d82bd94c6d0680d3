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

#include "macl/context.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace macl {

int Frame::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (triples[i].name() == name) return static_cast<int>(i);
  }
  throw UnknownConjunctor("unknown conjunctor '" + std::string(name) + "'");
}

Context::Context(Frame frame, std::vector<std::string> attributes,
                 std::vector<std::string> objects, std::vector<Grade> relation,
                 std::vector<int> sigma)
    : frame_(std::move(frame)),
      attributes_(std::move(attributes)),
      objects_(std::move(objects)),
      relation_(std::move(relation)),
      sigma_(std::move(sigma)) {
  if (attributes_.empty() || objects_.empty()) {
    throw InvalidContext("contexts need at least one attribute and object");
  }
  if (frame_.triples.empty()) {
    throw InvalidContext("frame carries no adjoint triples");
  }
  if (frame_.chain.n < 1) {
    throw InvalidContext("grade chain needs at least one step");
  }
  auto reject_duplicates = [](const std::vector<std::string>& names,
                              const char* what) {
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) {
      throw InvalidContext(std::string("duplicate ") + what + " name");
    }
  };
  reject_duplicates(attributes_, "attribute");
  reject_duplicates(objects_, "object");
  {
    std::set<std::string> names;
    for (const auto& t : frame_.triples) {
      if (!names.insert(t.name()).second) {
        throw InvalidContext("duplicate conjunctor name '" + t.name() + "'");
      }
      if (t.chain() != frame_.chain) {
        throw InvalidContext("conjunctor '" + t.name() +
                             "' lives on a different chain");
      }
      if (!t.boundary_both_args()) {
        throw InvalidContext("conjunctor '" + t.name() +
                             "' violates the boundary condition "
                             "conj(x, top) = conj(top, x) = x");
      }
    }
  }
  const std::size_t cells =
      static_cast<std::size_t>(n_attributes()) * n_objects();
  if (relation_.size() != cells || sigma_.size() != cells) {
    throw InvalidContext("relation/sigma shape does not match |A| x |B|");
  }
  for (Grade g : relation_) {
    if (!frame_.chain.contains(g)) {
      throw GridError("relation grade off the chain");
    }
  }
  for (int s : sigma_) {
    if (s < 0 || s >= static_cast<int>(frame_.triples.size())) {
      throw InvalidContext("sigma references a conjunctor out of range");
    }
  }
}

int Context::attribute_index(std::string_view name) const {
  for (int i = 0; i < n_attributes(); ++i) {
    if (attributes_[i] == name) return i;
  }
  throw UnknownAttribute("unknown attribute '" + std::string(name) + "'");
}

int Context::object_index(std::string_view name) const {
  for (int i = 0; i < n_objects(); ++i) {
    if (objects_[i] == name) return i;
  }
  throw UnknownObject("unknown object '" + std::string(name) + "'");
}

NormalizationReport is_normalized(const Context& ctx) {
  for (int a = 0; a < ctx.n_attributes(); ++a) {
    bool has_zero = false, has_nonzero = false;
    for (int b = 0; b < ctx.n_objects(); ++b) {
      (ctx.relation(a, b) == 0 ? has_zero : has_nonzero) = true;
    }
    if (!has_nonzero) {
      return {false, "attribute '" + ctx.attributes()[a] +
                         "' relates to no object"};
    }
    if (!has_zero) {
      return {false, "attribute '" + ctx.attributes()[a] +
                         "' relates to every object"};
    }
  }
  for (int b = 0; b < ctx.n_objects(); ++b) {
    bool has_zero = false, has_nonzero = false;
    for (int a = 0; a < ctx.n_attributes(); ++a) {
      (ctx.relation(a, b) == 0 ? has_zero : has_nonzero) = true;
    }
    if (!has_nonzero) {
      return {false,
              "object '" + ctx.objects()[b] + "' carries no attribute"};
    }
    if (!has_zero) {
      return {false,
              "object '" + ctx.objects()[b] + "' carries every attribute"};
    }
  }
  return {true, ""};
}

namespace {

std::vector<char> index_mask(int size, const std::vector<int>& xs,
                             const char* what) {
  std::vector<char> mask(size, 0);
  for (int x : xs) {
    if (x < 0 || x >= size) {
      throw InvalidContext(std::string(what) + " index out of range");
    }
    mask[x] = 1;
  }
  return mask;
}

}  // namespace

SeparabilityReport is_separable_subcontext(const Context& ctx,
                                           const std::vector<int>& attrs,
                                           const std::vector<int>& objs) {
  auto in_y = index_mask(ctx.n_attributes(), attrs, "attribute");
  auto in_x = index_mask(ctx.n_objects(), objs, "object");
  const int ny = static_cast<int>(std::count(in_y.begin(), in_y.end(), 1));
  const int nx = static_cast<int>(std::count(in_x.begin(), in_x.end(), 1));
  if (ny == 0 || nx == 0) {
    return {false, "both sides must be nonempty"};
  }
  if (ny == ctx.n_attributes() && nx == ctx.n_objects()) {
    return {false, "the whole context is not a proper subcontext"};
  }
  bool inner_nonzero = false;
  for (int a = 0; a < ctx.n_attributes(); ++a) {
    for (int b = 0; b < ctx.n_objects(); ++b) {
      const Grade g = ctx.relation(a, b);
      if (in_y[a] && in_x[b]) {
        inner_nonzero = inner_nonzero || g != 0;
      } else if ((in_y[a] || in_x[b]) && g != 0) {
        return {false, "R(" + ctx.attributes()[a] + ", " + ctx.objects()[b] +
                           ") = " + grade_to_string(ctx.chain(), g) +
                           " crosses the subcontext boundary"};
      }
    }
  }
  if (!inner_nonzero) {
    return {false, "the subcontext relates nothing"};
  }
  return {true, ""};
}

namespace {

// Connected components of the bipartite non-bottom incidence graph,
// returned as subcontext parts sorted by smallest attribute.
std::vector<SubcontextPart> incidence_components(const Context& ctx) {
  const int na = ctx.n_attributes(), nb = ctx.n_objects();
  // union-find over attributes [0, na) and objects [na, na + nb)
  std::vector<int> parent(na + nb);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < nb; ++b) {
      if (ctx.relation(a, b) != 0) parent[find(a)] = find(na + b);
    }
  }
  std::vector<SubcontextPart> parts;
  std::vector<int> root_part(na + nb, -1);
  for (int a = 0; a < na; ++a) {
    int r = find(a);
    if (root_part[r] == -1) {
      root_part[r] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[root_part[r]].attributes.push_back(a);
  }
  for (int b = 0; b < nb; ++b) {
    int r = find(na + b);
    if (root_part[r] == -1) {
      root_part[r] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[root_part[r]].objects.push_back(b);
  }
  std::sort(parts.begin(), parts.end(),
            [](const SubcontextPart& x, const SubcontextPart& y) {
              return x.attributes < y.attributes;
            });
  return parts;
}

void require_normalized(const Context& ctx) {
  NormalizationReport report = is_normalized(ctx);
  if (!report.ok) {
    throw NotNormalized("context is not normalized: " + report.violation);
  }
}

SubcontextPart merge_parts(const std::vector<SubcontextPart>& units,
                           const std::vector<int>& which) {
  SubcontextPart out;
  for (int u : which) {
    out.attributes.insert(out.attributes.end(), units[u].attributes.begin(),
                          units[u].attributes.end());
    out.objects.insert(out.objects.end(), units[u].objects.begin(),
                       units[u].objects.end());
  }
  std::sort(out.attributes.begin(), out.attributes.end());
  std::sort(out.objects.begin(), out.objects.end());
  return out;
}

}  // namespace

std::vector<SubcontextPart> enumerate_separable_subcontexts(
    const Context& ctx) {
  require_normalized(ctx);
  std::vector<SubcontextPart> units = incidence_components(ctx);
  const int m = static_cast<int>(units.size());
  if (m > 16) {
    throw TooLarge("too many incidence components: " + std::to_string(m));
  }
  std::vector<SubcontextPart> out;
  // all unions of a nonempty proper subset of the components
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<int> which;
    for (int u = 0; u < m; ++u) {
      if (mask & (1u << u)) which.push_back(u);
    }
    out.push_back(merge_parts(units, which));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DecompositionCheck check_decomposition(const Context& ctx,
                                       const SubcontextDecomposition& dec) {
  if (dec.parts.size() < 2) {
    return {false, "a decomposition needs at least two parts"};
  }
  std::vector<int> attr_part(ctx.n_attributes(), -1);
  std::vector<int> obj_part(ctx.n_objects(), -1);
  for (std::size_t p = 0; p < dec.parts.size(); ++p) {
    for (int a : dec.parts[p].attributes) {
      if (a < 0 || a >= ctx.n_attributes() || attr_part[a] != -1) {
        return {false, "attributes do not form a partition"};
      }
      attr_part[a] = static_cast<int>(p);
    }
    for (int b : dec.parts[p].objects) {
      if (b < 0 || b >= ctx.n_objects() || obj_part[b] != -1) {
        return {false, "objects do not form a partition"};
      }
      obj_part[b] = static_cast<int>(p);
    }
  }
  if (std::count(attr_part.begin(), attr_part.end(), -1) != 0 ||
      std::count(obj_part.begin(), obj_part.end(), -1) != 0) {
    return {false, "some attribute or object is in no part"};
  }
  for (const auto& part : dec.parts) {
    SeparabilityReport sep =
        is_separable_subcontext(ctx, part.attributes, part.objects);
    if (!sep.ok) {
      return {false, "part is not a separable subcontext: " + sep.violation};
    }
  }
  for (int a = 0; a < ctx.n_attributes(); ++a) {
    for (int b = 0; b < ctx.n_objects(); ++b) {
      if (attr_part[a] != obj_part[b] &&
          ctx.triple_at(a, b).has_zero_divisors()) {
        return {false, "sigma places the zero-divisor conjunctor '" +
                           ctx.triple_at(a, b).name() + "' on the cross cell (" +
                           ctx.attributes()[a] + ", " + ctx.objects()[b] + ")"};
      }
    }
  }
  return {true, ""};
}

std::vector<SubcontextDecomposition> enumerate_decompositions(
    const Context& ctx) {
  require_normalized(ctx);
  std::vector<SubcontextPart> components = incidence_components(ctx);
  const int m = static_cast<int>(components.size());

  // merge components joined by a zero-divisor conjunctor on a cross cell;
  // such cells forbid ever splitting the two components apart
  std::vector<int> comp_of_attr(ctx.n_attributes());
  std::vector<int> comp_of_obj(ctx.n_objects());
  for (int c = 0; c < m; ++c) {
    for (int a : components[c].attributes) comp_of_attr[a] = c;
    for (int b : components[c].objects) comp_of_obj[b] = c;
  }
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int a = 0; a < ctx.n_attributes(); ++a) {
    for (int b = 0; b < ctx.n_objects(); ++b) {
      if (comp_of_attr[a] != comp_of_obj[b] &&
          ctx.triple_at(a, b).has_zero_divisors()) {
        parent[find(comp_of_attr[a])] = find(comp_of_obj[b]);
      }
    }
  }
  std::vector<std::vector<int>> unit_components;  // merged units
  {
    std::vector<int> unit_of(m, -1);
    for (int c = 0; c < m; ++c) {
      int r = find(c);
      if (unit_of[r] == -1) {
        unit_of[r] = static_cast<int>(unit_components.size());
        unit_components.emplace_back();
      }
      unit_components[unit_of[r]].push_back(c);
    }
  }
  const int units = static_cast<int>(unit_components.size());
  if (units > 12) {
    throw TooLarge("too many independent units for set-partition "
                   "enumeration: " +
                   std::to_string(units));
  }

  std::vector<SubcontextDecomposition> out;
  if (units < 2) return out;

  std::vector<int> rgs(units, 0);
  while (true) {
    int groups = 1 + *std::max_element(rgs.begin(), rgs.end());
    if (groups >= 2) {
      std::vector<std::vector<int>> member_components(groups);
      for (int u = 0; u < units; ++u) {
        member_components[rgs[u]].insert(member_components[rgs[u]].end(),
                                         unit_components[u].begin(),
                                         unit_components[u].end());
      }
      SubcontextDecomposition dec;
      for (const auto& comps : member_components) {
        dec.parts.push_back(merge_parts(components, comps));
      }
      std::sort(dec.parts.begin(), dec.parts.end(),
                [](const SubcontextPart& x, const SubcontextPart& y) {
                  return x.attributes < y.attributes;
                });
      DecompositionCheck check = check_decomposition(ctx, dec);
      if (!check.ok) {
        throw CertificationFailure(
            "enumerated decomposition failed re-certification: " +
            check.violation);
      }
      out.push_back(std::move(dec));
    }
    int i = units - 1;
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
            [](const SubcontextDecomposition& x,
               const SubcontextDecomposition& y) { return x.parts < y.parts; });
  return out;
}

}  // namespace macl
