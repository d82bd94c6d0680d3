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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "macl/bridge.hpp"
#include "macl/io.hpp"
#include "macl/oracle.hpp"

// Exit codes: 0 all good, 1 verification failure, 2 input error,
// 3 size limit exceeded.

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitTooLarge = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw macl::ParseError("cannot write \"" + path + "\"");
  }
  out << text;
}

void emit_json(const std::string& path, const nlohmann::json& j) {
  write_text(path, j.dump(2) + "\n");
}

struct Options {
  std::string input;
  std::string json_path;  // empty: report goes to stdout
  std::string dot_path;   // empty: no DOT output
  bool oracle = false;
  int decomposition = 0;
  int max_concepts = 0;  // 0: unlimited
};

int run_concepts(const Options& opt) {
  macl::Context ctx = macl::io::context_from_json(macl::io::load_json_file(opt.input));
  macl::ConceptLattice lat = macl::enumerate_concepts(ctx);
  if (opt.max_concepts > 0 && lat.size() > opt.max_concepts) {
    throw macl::TooLarge(std::to_string(lat.size()) + " concepts exceed --max-concepts " +
                         std::to_string(opt.max_concepts));
  }

  bool oracle_ok = true;
  nlohmann::json report = macl::io::concepts_report(ctx, lat);
  if (opt.oracle) {
    std::vector<macl::FormalConcept> brute = macl::oracle::brute_concepts(ctx);
    oracle_ok = (brute == lat.concepts());
    report["oracle_match"] = oracle_ok;
  }
  emit_json(opt.json_path.empty() ? "-" : opt.json_path, report);
  if (!opt.dot_path.empty()) {
    write_text(opt.dot_path, macl::io::concepts_to_dot(ctx, lat));
  }
  return oracle_ok ? kExitPass : kExitVerificationFailure;
}

int run_blocks(const Options& opt) {
  macl::Lattice lat = macl::io::lattice_from_json(macl::io::load_json_file(opt.input));
  nlohmann::json report = macl::io::blocks_report(lat);

  bool oracle_ok = true;
  if (opt.oracle) {
    std::vector<std::vector<int>> brute = macl::oracle::brute_blocks(lat);
    std::vector<std::vector<int>> fast;
    try {
      for (const macl::Block& b : macl::enumerate_blocks(lat)) {
        fast.push_back(b.members);
      }
    } catch (const macl::NoBlocks&) {
    }
    oracle_ok = (fast == brute);
    report["oracle_match"] = oracle_ok;
  }
  emit_json(opt.json_path.empty() ? "-" : opt.json_path, report);
  if (!opt.dot_path.empty()) {
    write_text(opt.dot_path, macl::io::lattice_to_dot(lat));
  }
  return oracle_ok ? kExitPass : kExitVerificationFailure;
}

int run_decompose(const Options& opt) {
  macl::Context ctx = macl::io::context_from_json(macl::io::load_json_file(opt.input));
  std::vector<macl::SubcontextDecomposition> decs = macl::enumerate_decompositions(ctx);
  nlohmann::json report = macl::io::decompose_report(ctx, decs);

  bool oracle_ok = true;
  if (opt.oracle) {
    oracle_ok = (decs == macl::oracle::brute_decompositions(ctx));
    report["oracle_match"] = oracle_ok;
  }
  emit_json(opt.json_path.empty() ? "-" : opt.json_path, report);
  return oracle_ok ? kExitPass : kExitVerificationFailure;
}

int run_bridge(const Options& opt) {
  macl::Context ctx = macl::io::context_from_json(macl::io::load_json_file(opt.input));
  std::vector<macl::SubcontextDecomposition> decs = macl::enumerate_decompositions(ctx);
  if (decs.empty()) {
    throw macl::InvalidDecomposition("context has no decompositions to bridge");
  }
  if (opt.decomposition < 0 || opt.decomposition >= static_cast<int>(decs.size())) {
    throw macl::InvalidDecomposition(
        "--decomposition " + std::to_string(opt.decomposition) + " out of range (have " +
        std::to_string(decs.size()) + ")");
  }
  macl::ConceptLattice lat = macl::enumerate_concepts(ctx);
  nlohmann::json report = macl::io::bridge_report(ctx, lat, decs[opt.decomposition]);
  report["decomposition_index"] = opt.decomposition;
  report["decomposition_count"] = decs.size();
  emit_json(opt.json_path.empty() ? "-" : opt.json_path, report);
  return report["roundtrip_identity"].get<bool>() ? kExitPass : kExitVerificationFailure;
}

int run_verify(const Options& opt) {
  macl::Context ctx = macl::io::context_from_json(macl::io::load_json_file(opt.input));

  std::vector<macl::EquivalenceReport::Check> checks;
  auto add = [&checks](const std::string& name, bool pass, std::string detail) {
    checks.push_back({name, pass, std::move(detail)});
  };

  for (const macl::AdjointTriple& t : ctx.frame().triples) {
    auto cex = macl::verify_adjoint(t);
    add("adjoint/" + t.name(), !cex.has_value(),
        cex ? cex->detail : std::string());
    macl::TriplePropertyReport props = macl::verify_triple_properties(t);
    for (const auto& item : props.items) {
      add("property/" + t.name() + "/" + item.name, item.pass, item.witness);
    }
  }

  macl::NormalizationReport norm = macl::is_normalized(ctx);
  add("normalized", norm.ok, norm.violation);

  macl::ConceptLattice lat = macl::enumerate_concepts(ctx);
  add("concepts_match_oracle", lat.concepts() == macl::oracle::brute_concepts(ctx), "");

  std::vector<macl::SubcontextDecomposition> decs = macl::enumerate_decompositions(ctx);
  add("decompositions_match_oracle", decs == macl::oracle::brute_decompositions(ctx), "");

  bool roundtrip = true;
  std::string roundtrip_detail;
  for (std::size_t i = 0; i < decs.size(); ++i) {
    std::vector<std::vector<int>> sets;
    for (const macl::ConceptBlock& b : macl::blocks_from_decomposition(ctx, lat, decs[i])) {
      sets.push_back(b.concepts);
    }
    if (macl::subcontexts_from_blocks(ctx, lat, sets) != decs[i]) {
      roundtrip = false;
      roundtrip_detail = "decomposition " + std::to_string(i) + " does not round-trip";
      break;
    }
  }
  add("roundtrip_identity", roundtrip, roundtrip_detail);

  bool representation = true;
  std::string repr_detail;
  for (int a = 0; a < ctx.n_attributes() && representation; ++a) {
    for (int b = 0; b < ctx.n_objects() && representation; ++b) {
      for (macl::Grade x = 0; x <= ctx.chain().n && representation; ++x) {
        for (macl::Grade y = 0; y <= ctx.chain().n; ++y) {
          if (!macl::check_representation(ctx, a, x, b, y).consistent()) {
            representation = false;
            repr_detail = "disagreement at attribute " + ctx.attributes()[a] +
                          ", object " + ctx.objects()[b];
            break;
          }
        }
      }
    }
  }
  add("representation_consistent", representation, repr_detail);

  macl::EquivalenceReport eq = macl::verify_equivalence(ctx);
  nlohmann::json report = macl::io::equivalence_report_to_json(eq);
  bool pass = eq.pass;
  for (const auto& c : checks) pass = pass && c.pass;

  // Merge the standalone checks in front of the equivalence ones.
  nlohmann::json all_checks = nlohmann::json::array();
  for (const auto& c : checks) {
    all_checks.push_back(nlohmann::json{
        {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  for (const auto& c : report["checks"]) all_checks.push_back(c);
  report["checks"] = std::move(all_checks);
  report["pass"] = pass;

  emit_json(opt.json_path.empty() ? "-" : opt.json_path, report);
  return pass ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-adjoint concept lattices: concepts, blocks, decompositions"};
  app.require_subcommand(1);

  Options opt;

  CLI::App* concepts = app.add_subcommand(
      "concepts", "enumerate the concept lattice of a context");
  concepts->add_option("input", opt.input, "context JSON file")->required();
  concepts->add_option("--json", opt.json_path, "write the JSON report here (- for stdout)");
  concepts->add_option("--dot", opt.dot_path, "write the Hasse diagram as DOT (- for stdout)");
  concepts->add_flag("--oracle,!--no-oracle", opt.oracle,
                     "cross-check against the brute-force oracle");
  concepts->add_option("--max-concepts", opt.max_concepts,
                       "fail with the size-limit exit code beyond this many concepts");

  CLI::App* blocks = app.add_subcommand(
      "blocks", "enumerate blocks and block decompositions of a lattice");
  blocks->add_option("input", opt.input, "lattice JSON file")->required();
  blocks->add_option("--json", opt.json_path, "write the JSON report here (- for stdout)");
  blocks->add_option("--dot", opt.dot_path, "write the Hasse diagram as DOT (- for stdout)");
  blocks->add_flag("--oracle,!--no-oracle", opt.oracle,
                   "cross-check against the brute-force oracle");

  CLI::App* decompose = app.add_subcommand(
      "decompose", "enumerate decompositions of a context into independent subcontexts");
  decompose->add_option("input", opt.input, "context JSON file")->required();
  decompose->add_option("--json", opt.json_path, "write the JSON report here (- for stdout)");
  decompose->add_flag("--oracle,!--no-oracle", opt.oracle,
                      "cross-check against the brute-force oracle");

  CLI::App* bridge = app.add_subcommand(
      "bridge", "map a context decomposition to concept-lattice blocks and back");
  bridge->add_option("input", opt.input, "context JSON file")->required();
  bridge->add_option("--json", opt.json_path, "write the JSON report here (- for stdout)");
  bridge->add_option("--decomposition", opt.decomposition,
                     "index into the enumerated decompositions (default 0)");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the full equivalence and oracle suite on a context");
  verify->add_option("input", opt.input, "context JSON file")->required();
  verify->add_option("--json", opt.json_path, "write the JSON report here (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (opt.json_path == "-" && opt.dot_path == "-") {
    std::cerr << "error: --json and --dot cannot both write to stdout\n";
    return kExitInputError;
  }

  try {
    if (*concepts) return run_concepts(opt);
    if (*blocks) return run_blocks(opt);
    if (*decompose) return run_decompose(opt);
    if (*bridge) return run_bridge(opt);
    if (*verify) return run_verify(opt);
  } catch (const macl::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const macl::CertificationFailure& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const macl::PartitionFailure& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const macl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
