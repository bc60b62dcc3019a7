// Copyright 2026 The cliffsynth Authors
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

// Command-line front end: synth, verify, arch, bench.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cliffsynth/architecture.hpp"
#include "cliffsynth/bench.hpp"
#include "cliffsynth/circuit.hpp"
#include "cliffsynth/synthesis.hpp"
#include "cliffsynth/tableau.hpp"
#include "cliffsynth/verify.hpp"

namespace cs = cliffsynth;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// A gate-list file starts with "qubits", a tableau file with "n=".
cs::CliffordTableau load_tableau_or_circuit(const std::string& path) {
  const std::string text = slurp(path);
  std::istringstream is(text);
  std::string first;
  while (is >> first && first.front() == '#') {
    std::string rest;
    std::getline(is, rest);
  }
  if (first.rfind("n=", 0) == 0) return cs::parse_tableau(text);
  return cs::from_circuit(cs::parse_gatelist(text));
}

std::vector<std::size_t> load_mapping(const std::string& path) {
  const json doc = json::parse(slurp(path));
  const json& arr = doc.is_object() ? doc.at("mapping") : doc;
  return arr.get<std::vector<std::size_t>>();
}

int run_synth(const std::string& arch_name, const std::string& in_path,
              const std::string& tableau_path, const std::string& placement,
              const std::string& out_path, const std::string& qasm_path,
              const std::string& stats_path) {
  const cs::CouplingGraph graph = cs::load_graph(arch_name);
  const cs::CliffordTableau tableau = !tableau_path.empty()
                                          ? cs::read_tableau_file(tableau_path)
                                          : load_tableau_or_circuit(in_path);
  cs::SynthesisConfig cfg;
  cfg.placement = cs::parse_placement_mode(placement);

  const auto start = std::chrono::steady_clock::now();
  const cs::SynthesisResult result = cs::synthesize(tableau, graph, cfg);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (out_path.empty() || out_path == "-") {
    std::cout << cs::export_gatelist(result.circuit);
  } else {
    cs::write_gatelist_file(result.circuit, out_path);
  }
  if (!qasm_path.empty()) {
    std::ofstream(qasm_path) << cs::export_qasm(result.circuit);
  }
  json stats = {
      {"arch", graph.name()},
      {"num_qubits", graph.num_qubits()},
      {"placement", cs::to_string(cfg.placement)},
      {"counts", {{"h", result.counts.h}, {"s", result.counts.s}, {"cx", result.counts.cx}}},
      {"mapping", result.mapping},
      {"wall_time_ms", ms},
  };
  if (!stats_path.empty()) {
    std::ofstream(stats_path) << stats.dump(2) << "\n";
  } else {
    std::cerr << "h=" << result.counts.h << " s=" << result.counts.s
              << " cx=" << result.counts.cx << " (" << ms << " ms)\n";
  }
  return 0;
}

int run_verify(const std::string& arch_name, const std::string& tableau_path,
               const std::string& circuit_path, const std::string& mapping_path) {
  const cs::CouplingGraph graph = cs::load_graph(arch_name);
  const cs::CliffordTableau tableau = load_tableau_or_circuit(tableau_path);
  cs::SynthesisResult result;
  result.circuit = cs::read_gatelist_file(circuit_path);
  if (!mapping_path.empty()) {
    result.mapping = load_mapping(mapping_path);
  } else {
    for (std::size_t q = 0; q < result.circuit.num_qubits(); ++q) result.mapping.push_back(q);
  }
  result.counts = cs::count_gates(result.circuit);

  bool ok = true;
  if (result.circuit.num_qubits() != graph.num_qubits()) {
    std::cout << "FAIL qubit count: circuit has " << result.circuit.num_qubits()
              << ", architecture has " << graph.num_qubits() << "\n";
    return 1;
  }
  for (const auto& v : cs::check_connectivity(result.circuit, graph)) {
    std::cout << "FAIL connectivity: gate " << v.gate_index << " '" << cs::to_string(v.gate)
              << "' is not on an edge\n";
    ok = false;
  }
  if (!cs::check_roundtrip(tableau, result)) {
    std::cout << "FAIL round-trip: circuit does not reproduce the tableau\n";
    ok = false;
  }
  if (ok) std::cout << "OK\n";
  return ok ? 0 : 1;
}

int run_arch_list() {
  for (const std::string& name : cs::builtin_architecture_names()) {
    const cs::CouplingGraph g = cs::load_graph(name);
    std::cout << name << "\t" << g.num_qubits() << " qubits\t" << g.edges().size() << " edges\n";
  }
  std::cout << "complete-N\tall-to-all on N qubits\nline-N\tpath on N qubits\n";
  return 0;
}

int run_arch_show(const std::string& name) {
  const cs::CouplingGraph g = cs::load_graph(name);
  std::cout << "name: " << g.name() << "\n"
            << "vertices: " << g.num_qubits() << "\n"
            << "edges: " << g.edges().size() << "\n"
            << "diameter: " << g.diameter() << "\n";
  for (const auto& [u, v] : g.edges()) std::cout << u << " " << v << "\n";
  return 0;
}

void write_outputs(const std::vector<cs::ExperimentRow>& rows,
                   const std::vector<cs::SummaryRow>& summary, std::ofstream* out,
                   std::ofstream* sum, bool header) {
  if (out) cs::write_rows_csv(*out, rows, header);
  if (sum) cs::write_summary_csv(*sum, summary, header);
  if (!out) cs::write_rows_csv(std::cout, rows, header);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Architecture-aware Clifford tableau synthesis"};
  app.require_subcommand(1);

  auto* synth = app.add_subcommand("synth", "Synthesize a circuit for a tableau on a device");
  std::string arch, in_path, tableau_in, placement = "lazy", out_path, qasm_path, stats_path;
  synth->add_option("--arch", arch, "Builtin architecture name or coupling-map JSON")->required();
  auto* in_opt = synth->add_option("--in", in_path, "Gate-list or tableau file");
  auto* tab_opt = synth->add_option("--tableau-in", tableau_in, "Tableau text file");
  in_opt->excludes(tab_opt);
  synth->add_option("--placement", placement, "identity|lazy")
      ->check(CLI::IsMember({"identity", "lazy"}));
  synth->add_option("--out", out_path, "Output gate list (default: stdout)");
  synth->add_option("--qasm", qasm_path, "Also write OpenQASM 2.0");
  synth->add_option("--stats", stats_path, "Statistics JSON");

  auto* verify = app.add_subcommand("verify", "Check a circuit against a tableau and device");
  std::string v_arch, v_tableau, v_circuit, v_mapping;
  verify->add_option("--arch", v_arch)->required();
  verify->add_option("--tableau", v_tableau, "Tableau or gate-list file")->required();
  verify->add_option("--circuit", v_circuit, "Physical gate list")->required();
  verify->add_option("--mapping", v_mapping, "JSON array or stats JSON with 'mapping'");

  auto* arch_cmd = app.add_subcommand("arch", "Inspect coupling graphs");
  arch_cmd->require_subcommand(1);
  arch_cmd->add_subcommand("list", "List builtin architectures");
  auto* show = arch_cmd->add_subcommand("show", "Print vertices, edges and diameter");
  std::string show_name;
  show->add_option("name", show_name)->required();

  auto* bench = app.add_subcommand("bench", "Random-circuit gate-count sweep");
  std::string b_arch, b_gates, b_out, b_summary, b_placement = "lazy";
  std::size_t b_trials = 20, b_threads = 1;
  std::uint64_t b_seed = 42;
  bool all_ibm = false;
  bench->add_option("--arch", b_arch);
  bench->add_option("--gates", b_gates, "start:stop:step or comma list");
  bench->add_option("--trials", b_trials, "Circuits per gate count");
  bench->add_option("--seed", b_seed);
  bench->add_option("--placement", b_placement)->check(CLI::IsMember({"identity", "lazy"}));
  bench->add_option("--threads", b_threads);
  bench->add_option("--out", b_out, "Per-trial CSV (default: stdout)");
  bench->add_option("--summary", b_summary, "Summary CSV");
  bench->add_flag("--all-ibm-archs,--all-paper-archs", all_ibm,
                  "Sweep the six IBM devices up to twice their convergence threshold");

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) {
      if (in_path.empty() && tableau_in.empty()) {
        std::cerr << "synth: one of --in or --tableau-in is required\n";
        return 2;
      }
      return run_synth(arch, in_path, tableau_in, placement, out_path, qasm_path, stats_path);
    }
    if (verify->parsed()) return run_verify(v_arch, v_tableau, v_circuit, v_mapping);
    if (arch_cmd->parsed()) {
      if (show->parsed()) return run_arch_show(show_name);
      return run_arch_list();
    }
    if (bench->parsed()) {
      std::vector<std::pair<std::string, std::vector<std::size_t>>> sweeps;
      if (all_ibm) {
        for (const std::string& name : cs::ibm_architectures()) {
          const std::size_t threshold = *cs::convergence_threshold(name);
          std::vector<std::size_t> counts;
          for (std::size_t k = 1; k <= 8; ++k) counts.push_back(threshold * k / 4);
          sweeps.emplace_back(name, b_gates.empty() ? counts : cs::parse_gate_counts(b_gates));
        }
      } else {
        if (b_arch.empty() || b_gates.empty()) {
          std::cerr << "bench: --arch and --gates are required without --all-ibm-archs\n";
          return 2;
        }
        sweeps.emplace_back(b_arch, cs::parse_gate_counts(b_gates));
      }
      std::unique_ptr<std::ofstream> out, sum;
      if (!b_out.empty()) out = std::make_unique<std::ofstream>(b_out);
      if (!b_summary.empty()) sum = std::make_unique<std::ofstream>(b_summary);
      bool header = true;
      for (const auto& [name, counts] : sweeps) {
        cs::ExperimentSpec spec;
        spec.arch = name;
        spec.gate_counts = counts;
        spec.circuits_per_point = b_trials;
        spec.rng_seed = b_seed;
        spec.placement = cs::parse_placement_mode(b_placement);
        spec.threads = b_threads;
        const auto rows = cs::run_experiment(spec);
        const std::size_t n = cs::load_graph(name).num_qubits();
        const auto summary = cs::summarize(rows, n, cs::convergence_threshold(name));
        write_outputs(rows, summary, out.get(), sum.get(), header);
        for (const auto& s : summary) {
          if (s.bucket == "converged") {
            std::cerr << name << ": converged median cx " << s.median_cx << ", complete-graph "
                      << s.median_cx_fc << ", routing portion " << s.routing_portion * 100.0
                      << "%\n";
          }
        }
        header = false;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
