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

#include "macl/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace macl {
namespace io {

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) {
    throw ParseError(std::string(what) + " must be a string");
  }
  return j.get<std::string>();
}

// Grades travel either as exact fraction strings ("2/5", "0", "1") or as
// decimals that land exactly on the chain.
Grade grade_from_json(GradeChain chain, const json& j) {
  if (j.is_string()) return grade_from_string(chain, j.get<std::string>());
  if (j.is_number()) return grade_from_double(chain, j.get<double>());
  throw ParseError("grade must be a fraction string or a number");
}

}  // namespace

Lattice lattice_from_json(const json& j) {
  const json& elems = field(j, "elements");
  const json& covers = field(j, "covers");
  if (!elems.is_array() || !covers.is_array()) {
    throw ParseError("\"elements\" and \"covers\" must be arrays");
  }
  std::vector<std::string> labels;
  for (const json& e : elems) labels.push_back(as_string(e, "element"));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const json& c : covers) {
    if (!c.is_array() || c.size() != 2) {
      throw ParseError("each cover must be a [lower, upper] pair");
    }
    pairs.emplace_back(as_string(c[0], "cover endpoint"),
                       as_string(c[1], "cover endpoint"));
  }
  return Lattice::from_covers(std::move(labels), pairs);
}

json lattice_to_json(const Lattice& lat) {
  json j;
  j["elements"] = lat.labels();
  json covers = json::array();
  for (auto [lo, hi] : lat.covers()) {
    covers.push_back({lat.label(lo), lat.label(hi)});
  }
  j["covers"] = std::move(covers);
  return j;
}

Frame frame_from_json(const json& j) {
  const json& grades = field(j, "grades");
  if (!grades.is_number_integer() || grades.get<int>() < 1) {
    throw ParseError("\"grades\" must be a positive integer");
  }
  GradeChain chain{grades.get<int>()};

  Frame frame{chain, {}};
  const json& conjs = field(j, "conjunctors");
  if (!conjs.is_array() || conjs.empty()) {
    throw ParseError("\"conjunctors\" must be a non-empty array");
  }
  for (const json& c : conjs) {
    std::string name = as_string(field(c, "name"), "conjunctor name");
    for (const AdjointTriple& t : frame.triples) {
      if (t.name() == name) {
        throw ParseError("duplicate conjunctor name \"" + name + "\"");
      }
    }
    std::string kind = as_string(field(c, "kind"), "conjunctor kind");
    if (kind == "godel") {
      frame.triples.push_back(builtin_triple(chain, TNormKind::Godel, name));
    } else if (kind == "lukasiewicz") {
      frame.triples.push_back(
          builtin_triple(chain, TNormKind::Lukasiewicz, name));
    } else if (kind == "product") {
      frame.triples.push_back(builtin_triple(chain, TNormKind::Product, name));
    } else if (kind == "table") {
      const json& rows = field(c, "table");
      if (!rows.is_array() || rows.size() != static_cast<std::size_t>(chain.size())) {
        throw ParseError("conjunctor table must have one row per grade");
      }
      std::vector<Grade> conj;
      for (const json& row : rows) {
        if (!row.is_array() ||
            row.size() != static_cast<std::size_t>(chain.size())) {
          throw ParseError("conjunctor table rows must have one entry per grade");
        }
        for (const json& cell : row) {
          conj.push_back(grade_from_json(chain, cell));
        }
      }
      frame.triples.push_back(triple_from_table(name, chain, std::move(conj)));
    } else {
      throw ParseError("unknown conjunctor kind \"" + kind + "\"");
    }
  }
  return frame;
}

json frame_to_json(const Frame& frame) {
  json j;
  j["grades"] = frame.chain.n;
  json conjs = json::array();
  // Builtins are recognized by their conjunctor table so that a frame
  // round-trips to the compact form no matter how it was constructed.
  const std::vector<Grade> godel =
      builtin_triple(frame.chain, TNormKind::Godel).conj_table();
  const std::vector<Grade> luka =
      builtin_triple(frame.chain, TNormKind::Lukasiewicz).conj_table();
  const std::vector<Grade> prod =
      builtin_triple(frame.chain, TNormKind::Product).conj_table();
  for (const AdjointTriple& t : frame.triples) {
    json c;
    c["name"] = t.name();
    if (t.conj_table() == godel) {
      c["kind"] = "godel";
    } else if (t.conj_table() == luka) {
      c["kind"] = "lukasiewicz";
    } else if (t.conj_table() == prod) {
      c["kind"] = "product";
    } else {
      c["kind"] = "table";
      json rows = json::array();
      for (Grade x = 0; x <= frame.chain.n; ++x) {
        json row = json::array();
        for (Grade y = 0; y <= frame.chain.n; ++y) {
          row.push_back(grade_to_string(frame.chain, t.conj(x, y)));
        }
        rows.push_back(std::move(row));
      }
      c["table"] = std::move(rows);
    }
    conjs.push_back(std::move(c));
  }
  j["conjunctors"] = std::move(conjs);
  return j;
}

Context context_from_json(const json& j) {
  Frame frame = frame_from_json(field(j, "frame"));
  const GradeChain chain = frame.chain;

  std::vector<std::string> attrs, objs;
  for (const json& a : field(j, "attributes")) {
    attrs.push_back(as_string(a, "attribute"));
  }
  for (const json& b : field(j, "objects")) {
    objs.push_back(as_string(b, "object"));
  }

  const json& rel = field(j, "relation");
  const json& sig = field(j, "sigma");
  if (!rel.is_array() || rel.size() != attrs.size() || !sig.is_array() ||
      sig.size() != attrs.size()) {
    throw ParseError("\"relation\" and \"sigma\" must have one row per attribute");
  }
  std::vector<Grade> relation;
  std::vector<int> sigma;
  for (std::size_t a = 0; a < attrs.size(); ++a) {
    if (!rel[a].is_array() || rel[a].size() != objs.size() ||
        !sig[a].is_array() || sig[a].size() != objs.size()) {
      throw ParseError("\"relation\" and \"sigma\" rows must have one entry per object");
    }
    for (std::size_t b = 0; b < objs.size(); ++b) {
      relation.push_back(grade_from_json(chain, rel[a][b]));
      sigma.push_back(frame.index_of(as_string(sig[a][b], "sigma entry")));
    }
  }
  return Context(std::move(frame), std::move(attrs), std::move(objs),
                 std::move(relation), std::move(sigma));
}

json context_to_json(const Context& ctx) {
  json j;
  j["frame"] = frame_to_json(ctx.frame());
  j["attributes"] = ctx.attributes();
  j["objects"] = ctx.objects();
  json rel = json::array(), sig = json::array();
  for (int a = 0; a < ctx.n_attributes(); ++a) {
    json rrow = json::array(), srow = json::array();
    for (int b = 0; b < ctx.n_objects(); ++b) {
      rrow.push_back(grade_to_string(ctx.chain(), ctx.relation(a, b)));
      srow.push_back(ctx.triple_at(a, b).name());
    }
    rel.push_back(std::move(rrow));
    sig.push_back(std::move(srow));
  }
  j["relation"] = std::move(rel);
  j["sigma"] = std::move(sig);
  return j;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());  // keeps nlohmann's byte position
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open \"" + path + "\"");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

json concept_to_json(const Context& ctx, const FormalConcept& c) {
  json extent = json::object(), intent = json::object();
  for (int b = 0; b < ctx.n_objects(); ++b) {
    if (c.extent[b] != ctx.chain().bottom()) {
      extent[ctx.objects()[b]] = grade_to_string(ctx.chain(), c.extent[b]);
    }
  }
  for (int a = 0; a < ctx.n_attributes(); ++a) {
    if (c.intent[a] != ctx.chain().bottom()) {
      intent[ctx.attributes()[a]] = grade_to_string(ctx.chain(), c.intent[a]);
    }
  }
  return json{{"extent", std::move(extent)}, {"intent", std::move(intent)}};
}

json concepts_report(const Context& ctx, const ConceptLattice& lat) {
  json j;
  j["count"] = lat.size();
  json concepts = json::array();
  for (const FormalConcept& c : lat.concepts()) {
    concepts.push_back(concept_to_json(ctx, c));
  }
  j["concepts"] = std::move(concepts);
  json covers = json::array();
  for (auto [lo, hi] : lat.covers()) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  j["irreducible"] = lat.meet_irreducibles();
  j["bottom"] = lat.bottom();
  j["top"] = lat.top();
  return j;
}

namespace {

json members_as_labels(const Lattice& lat, const std::vector<int>& members) {
  json out = json::array();
  for (int x : members) out.push_back(lat.label(x));
  return out;
}

}  // namespace

json blocks_report(const Lattice& lat) {
  std::vector<Block> blocks, minimal;
  try {
    blocks = enumerate_blocks(lat);
    minimal = enumerate_minimal_blocks(lat);
  } catch (const NoBlocks&) {
    blocks.clear();
    minimal.clear();
  }
  json j;
  j["count"] = blocks.size();
  json all = json::array();
  for (const Block& b : blocks) all.push_back(members_as_labels(lat, b.members));
  j["blocks"] = std::move(all);
  json mins = json::array();
  for (const Block& b : minimal) {
    mins.push_back(members_as_labels(lat, b.members));
  }
  j["minimal_blocks"] = std::move(mins);
  json decs = json::array();
  for (const BlockDecomposition& d : enumerate_block_decompositions(lat)) {
    json groups = json::array();
    for (const Block& b : d.blocks) {
      groups.push_back(members_as_labels(lat, b.members));
    }
    decs.push_back(std::move(groups));
  }
  j["decompositions"] = std::move(decs);
  return j;
}

json decomposition_to_json(const Context& ctx,
                           const SubcontextDecomposition& dec) {
  json parts = json::array();
  for (const SubcontextPart& p : dec.parts) {
    json attrs = json::array(), objs = json::array();
    for (int a : p.attributes) attrs.push_back(ctx.attributes()[a]);
    for (int b : p.objects) objs.push_back(ctx.objects()[b]);
    parts.push_back(
        json{{"attributes", std::move(attrs)}, {"objects", std::move(objs)}});
  }
  return parts;
}

json decompose_report(const Context& ctx,
                      const std::vector<SubcontextDecomposition>& decs) {
  json j;
  j["count"] = decs.size();
  json all = json::array();
  for (const SubcontextDecomposition& d : decs) {
    all.push_back(decomposition_to_json(ctx, d));
  }
  j["decompositions"] = std::move(all);
  return j;
}

json bridge_report(const Context& ctx, const ConceptLattice& lat,
                   const SubcontextDecomposition& dec) {
  json j;
  j["decomposition"] = decomposition_to_json(ctx, dec);
  std::vector<ConceptBlock> blocks = blocks_from_decomposition(ctx, lat, dec);
  json jblocks = json::array();
  std::vector<std::vector<int>> index_sets;
  for (const ConceptBlock& cb : blocks) {
    json names = json::array();
    for (int c : cb.concepts) names.push_back("C" + std::to_string(c));
    jblocks.push_back(json{{"concepts", std::move(names)},
                           {"complete", cb.complete}});
    index_sets.push_back(cb.concepts);
  }
  j["blocks"] = std::move(jblocks);
  SubcontextDecomposition back = subcontexts_from_blocks(ctx, lat, index_sets);
  j["recovered"] = decomposition_to_json(ctx, back);
  j["roundtrip_identity"] = (back == dec);
  return j;
}

json equivalence_report_to_json(const EquivalenceReport& report) {
  json j;
  j["context_decompositions"] = report.context_decompositions;
  j["block_decompositions"] = report.block_decompositions;
  json fwd = json::array(), bwd = json::array();
  for (auto [a, b] : report.forward_matches) fwd.push_back({a, b});
  for (auto [a, b] : report.backward_matches) bwd.push_back({a, b});
  j["forward_matches"] = std::move(fwd);
  j["backward_matches"] = std::move(bwd);
  json checks = json::array();
  for (const EquivalenceReport::Check& c : report.checks) {
    checks.push_back(
        json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["pass"] = report.pass;
  return j;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// {b1, b2:3/5} style rendering; full membership drops the grade.
std::string fuzzy_set(const std::vector<std::string>& names, GradeChain chain,
                      const GradeVec& v) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == chain.bottom()) continue;
    if (!first) out += ", ";
    first = false;
    out += names[i];
    if (v[i] != chain.top()) {
      out += ":";
      out += grade_to_string(chain, v[i]);
    }
  }
  return out + "}";
}

}  // namespace

std::string lattice_to_dot(const Lattice& lat) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int x = 0; x < lat.size(); ++x) {
    out << "  " << dot_quote(lat.label(x)) << ";\n";
  }
  for (auto [lo, hi] : lat.covers()) {
    out << "  " << dot_quote(lat.label(lo)) << " -> "
        << dot_quote(lat.label(hi)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string concepts_to_dot(const Context& ctx, const ConceptLattice& lat) {
  std::ostringstream out;
  out << "digraph concepts {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int c = 0; c < lat.size(); ++c) {
    const FormalConcept& fc = lat.at(c);
    std::string tip =
        "extent " + fuzzy_set(ctx.objects(), ctx.chain(), fc.extent) +
        "; intent " + fuzzy_set(ctx.attributes(), ctx.chain(), fc.intent);
    out << "  C" << c << " [tooltip=" << dot_quote(tip) << "];\n";
  }
  for (auto [lo, hi] : lat.covers()) {
    out << "  C" << lo << " -> C" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace io
}  // namespace macl
