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

#include <json.hpp>

#include "macl/blocks.hpp"
#include "macl/bridge.hpp"
#include "macl/concepts.hpp"
#include "macl/context.hpp"
#include "macl/lattice.hpp"

// JSON formats and DOT rendering. Grades travel as exact "k/n" fraction
// strings (or 0 / 1); decimals are accepted on input when they land exactly
// on the chain. All emitters sort canonically, so identical inputs produce
// byte-identical output.

namespace macl {
namespace io {

using nlohmann::json;

// {"elements": [...], "covers": [["bot","a"], ...]}
Lattice lattice_from_json(const json& j);
json lattice_to_json(const Lattice& lat);

// {"grades": n, "conjunctors": [{"name": ..., "kind":
//  "godel"|"lukasiewicz"|"product"} | {"name": ..., "kind": "table",
//  "table": [[...]]}, ...]}
Frame frame_from_json(const json& j);
json frame_to_json(const Frame& frame);

// {"frame": {...}, "attributes": [...], "objects": [...],
//  "relation": [[grades]], "sigma": [[conjunctor names]]}
Context context_from_json(const json& j);
json context_to_json(const Context& ctx);

// Wrappers around json::parse that rethrow as ParseError with the byte
// position preserved in the message.
json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);

// {"extent": {"b1": "3/5", ...}, "intent": {...}}; bottom grades omitted.
json concept_to_json(const Context& ctx, const FormalConcept& c);

// {"count", "concepts", "covers", "irreducible", "bottom", "top"}
json concepts_report(const Context& ctx, const ConceptLattice& lat);

// {"count", "blocks", "minimal_blocks", "decompositions"} over labels.
json blocks_report(const Lattice& lat);

// {"count", "decompositions": [[{"attributes": [...], "objects": [...]}]]}
json decompose_report(const Context& ctx,
                      const std::vector<SubcontextDecomposition>& decs);

json decomposition_to_json(const Context& ctx,
                           const SubcontextDecomposition& dec);

// {"decomposition", "blocks", "recovered", "roundtrip_identity"}
json bridge_report(const Context& ctx, const ConceptLattice& lat,
                   const SubcontextDecomposition& dec);

json equivalence_report_to_json(const EquivalenceReport& report);

// Hasse diagram as a digraph, edges lower -> upper, nodes in index order.
std::string lattice_to_dot(const Lattice& lat);
// Same for a concept lattice; nodes C0..Ck in canonical extent order with
// extent/intent tooltips.
std::string concepts_to_dot(const Context& ctx, const ConceptLattice& lat);

}  // namespace io
}  // namespace macl
