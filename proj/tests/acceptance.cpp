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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cliffsynth/architecture.hpp"
#include "cliffsynth/bench.hpp"
#include "cliffsynth/synthesis.hpp"
#include "cliffsynth/tableau.hpp"
#include "cliffsynth/verify.hpp"

namespace cs = cliffsynth;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. Round-trip and connectivity on random inputs, both placements.
Outcome roundtrip_property() {
  const std::vector<std::string> archs = {"complete-5", "line-5", "quito", "nairobi", "guadalupe"};
  const auto start = Clock::now();
  std::mt19937_64 seeds(2024);
  std::size_t runs = 0, failures = 0;
  std::ostringstream detail;
  for (const std::string& name : archs) {
    const cs::CouplingGraph g = cs::load_graph(name);
    for (int k = 0; k < 1000; ++k) {
      cs::Rng rng(seeds());
      const std::size_t gates = 1 + rng.below(300);
      const cs::CliffordTableau t =
          cs::from_circuit(cs::random_clifford_circuit(g.num_qubits(), gates, rng));
      for (const auto mode : {cs::PlacementMode::Identity, cs::PlacementMode::Lazy}) {
        cs::SynthesisConfig cfg;
        cfg.placement = mode;
        const cs::SynthesisResult r = cs::synthesize(t, g, cfg);
        ++runs;
        if (!cs::check_roundtrip(t, r) || !cs::check_connectivity(r.circuit, g).empty()) {
          if (failures++ == 0) detail << "first failure on " << name << " input " << k << "; ";
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  detail << runs << " syntheses, " << failures << " failures, " << elapsed << " s";
  return {failures == 0 && elapsed < 120.0, detail.str()};
}

// 2. State-vector oracle agrees with the tableau; C C^dagger fixes |0...0>.
Outcome oracle_equivalence() {
  std::mt19937_64 seeds(77);
  std::size_t mismatches = 0, drift = 0;
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    cs::Rng rng(seeds());
    const std::size_t n = 2 + rng.below(4);
    const cs::Circuit c = cs::random_clifford_circuit(n, 1 + rng.below(80), rng);
    if (!cs::unitary_matches_tableau(c, cs::from_circuit(c))) ++mismatches;
    const auto psi = cs::statevector_oracle(cs::append_inverse(c));
    const double err = std::abs(std::abs(psi[0]) - 1.0);
    worst = std::max(worst, err);
    if (err > 1e-10) ++drift;
  }
  std::ostringstream detail;
  detail << "500 circuits, " << mismatches << " conjugation mismatches, " << drift
         << " amplitude deviations (worst " << worst << ")";
  return {mismatches == 0 && drift == 0, detail.str()};
}

cs::SummaryRow converged_summary(const std::string& arch, std::size_t threshold,
                                 std::size_t per_point) {
  cs::ExperimentSpec spec;
  spec.arch = arch;
  spec.gate_counts = {threshold, threshold * 3 / 2, threshold * 2};
  spec.circuits_per_point = per_point;
  spec.rng_seed = 42;
  const auto rows = cs::run_experiment(spec);
  const std::size_t n = cs::load_graph(arch).num_qubits();
  for (const cs::SummaryRow& s : cs::summarize(rows, n, threshold)) {
    if (s.bucket == "converged") return s;
  }
  throw std::logic_error("no converged bucket");
}

// 3. Median CX on complete graphs, and its ratio to n^2.
Outcome complete_asymptote() {
  struct Target {
    std::size_t n, threshold;
    double lo, hi;
  };
  const std::vector<Target> targets = {{5, 75, 11, 19}, {7, 110, 24, 38}, {16, 250, 130, 205}};
  Outcome out;
  std::ostringstream detail;
  for (const Target& t : targets) {
    const cs::SummaryRow s = converged_summary("complete-" + std::to_string(t.n), t.threshold, 34);
    const double ratio = s.median_cx / static_cast<double>(t.n * t.n);
    const bool ok = s.median_cx >= t.lo && s.median_cx <= t.hi && ratio <= 0.8;
    out.pass = out.pass && ok;
    detail << "complete-" << t.n << " median " << s.median_cx << " in [" << t.lo << "," << t.hi
           << "] ratio " << ratio << " over " << s.trials << (ok ? "; " : " (out of range); ");
  }
  out.detail = detail.str();
  return out;
}

// 4. Routing portion on three IBM devices.
Outcome routing_portion() {
  struct Target {
    std::string arch;
    double expected, tolerance;
  };
  const std::vector<Target> targets = {
      {"quito", 16.93, 8.0}, {"nairobi", 23.70, 8.0}, {"guadalupe", 30.57, 10.0}};
  Outcome out;
  std::ostringstream detail;
  for (const Target& t : targets) {
    const cs::SummaryRow s = converged_summary(t.arch, *cs::convergence_threshold(t.arch), 34);
    const double percent = 100.0 * s.routing_portion;
    const bool ok = std::abs(percent - t.expected) <= t.tolerance;
    out.pass = out.pass && ok;
    detail << t.arch << " " << percent << "% (target " << t.expected << " +/- " << t.tolerance
           << " pp, " << s.trials << " circuits)" << (ok ? "; " : " OUT OF RANGE; ");
  }
  out.detail = detail.str();
  return out;
}

// 5. 127-qubit device and complete graph.
Outcome scalability() {
  Outcome out;
  std::ostringstream detail;
  const cs::CouplingGraph brisbane = cs::load_graph("brisbane");
  cs::Rng rng(cs::trial_seed(42, 3000, 0));
  const cs::CliffordTableau t =
      cs::from_circuit(cs::random_clifford_circuit(brisbane.num_qubits(), 3000, rng));
  const auto start = Clock::now();
  const cs::SynthesisResult r = cs::synthesize(t, brisbane);
  const double elapsed = seconds_since(start);
  const bool valid = cs::check_roundtrip(t, r) && cs::check_connectivity(r.circuit, brisbane).empty();
  out.pass = valid && elapsed < 60.0;
  detail << "brisbane 3000 gates: " << r.counts.cx << " CX in " << elapsed << " s, "
         << (valid ? "valid" : "INVALID") << "; ";

  const cs::CouplingGraph complete = cs::CouplingGraph::complete(127);
  std::vector<double> cx;
  for (std::size_t trial = 0; trial < 10; ++trial) {
    cs::Rng trial_rng(cs::trial_seed(42, 6000, trial));
    const cs::CliffordTableau ct =
        cs::from_circuit(cs::random_clifford_circuit(127, 6000, trial_rng));
    const cs::SynthesisResult cr = cs::synthesize(ct, complete);
    if (!cs::check_roundtrip(ct, cr)) out.pass = false;
    cx.push_back(static_cast<double>(cr.counts.cx));
  }
  const double ratio = cs::median(cx) / (127.0 * 127.0);
  out.pass = out.pass && ratio <= 0.8;
  detail << "complete-127 median CX " << cs::median(cx) << ", ratio " << ratio << " over 10 trials";
  out.detail = detail.str();
  return out;
}

// 6. Line worked example and pivot-cost values.
Outcome worked_example() {
  Outcome out;
  std::ostringstream detail;
  const cs::CouplingGraph line = cs::CouplingGraph::line(3);
  cs::CliffordTableau t = cs::from_circuit(cs::Circuit(3, {cs::Gate::cx(0, 2)}));
  cs::QubitMapping id = cs::QubitMapping::identity(3);
  const auto gates = cs::remove_interactions_destab(t, 0, line, line.all_vertices(), id);
  const std::vector<cs::Gate> expected = {cs::Gate::cx(2, 1), cs::Gate::cx(1, 2),
                                          cs::Gate::cx(0, 1)};
  const bool sequence_ok = gates == expected;
  detail << "CNOT sequence (1-indexed):";
  for (const auto& g : gates) detail << " (" << g.q0 + 1 << "," << g.q1 + 1 << ")";
  detail << (sequence_ok ? "" : " EXPECTED (3,2) (2,3) (1,2)");

  // Costs on the same tableau, expanded by hand from the definition:
  // destabilizer row 0 = X0 X2, stabilizer row 0 = Z0, so s(0) = d(0,2) = 2.
  const cs::CliffordTableau cost_t = cs::from_circuit(cs::Circuit(3, {cs::Gate::cx(0, 2)}));
  const std::size_t s0 = cs::pivot_cost(cost_t, 0, line.distances(), id);
  const cs::CliffordTableau local =
      cs::from_circuit(cs::Circuit(3, {cs::Gate::h(0), cs::Gate::s(0), cs::Gate::cx(1, 2)}));
  const std::size_t local0 = cs::pivot_cost(local, 0, line.distances(), id);
  const bool costs_ok = s0 == 2 && local0 == 0;
  detail << "; s(0) for CX(0,2) on line-3 = " << s0 << " (expanded: 2), pivot-local rows = "
         << local0 << " (expected 0)";
  out.pass = sequence_ok && costs_ok;
  out.detail = detail.str();
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 round-trip and connectivity", roundtrip_property},
      {"2 state-vector oracle equivalence", oracle_equivalence},
      {"3 complete-graph CX asymptote", complete_asymptote},
      {"4 routing portion on IBM devices", routing_portion},
      {"5 127-qubit scalability", scalability},
      {"6 worked example and pivot costs", worked_example},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome result;
    try {
      result = check();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    if (!result.pass) ++failed;
    std::cout << (result.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << result.detail
              << std::endl;
  }
  std::cout << "N/A   criterion 7 hardware runs and baseline tools: excluded, covered by 1 and 2"
            << std::endl;
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
