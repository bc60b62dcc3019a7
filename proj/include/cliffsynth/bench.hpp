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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cliffsynth/circuit.hpp"
#include "cliffsynth/synthesis.hpp"

namespace cliffsynth {

/// Seedable generator with a platform-independent stream: std::mt19937_64
/// (whose output sequence is fixed by the standard) plus our own unbiased
/// bounded draw, so no library-specific distribution is involved.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer chain over (seed, gate_count, trial).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t gate_count, std::uint64_t trial);

/// Each gate's kind is uniform over {H, S, CX}; single-qubit targets are
/// uniform, CX uses a uniform ordered pair of distinct qubits. Throws
/// std::invalid_argument if n < 2 and gates > 0.
Circuit random_clifford_circuit(std::size_t n, std::size_t gates, Rng& rng);

/// (cx_routed - cx_fully_connected) / cx_routed. Throws for cx_routed == 0.
double routing_portion(std::size_t cx_routed, std::size_t cx_fully_connected);

/// Input size from which CNOT counts have plateaued, for the six IBM devices.
std::optional<std::size_t> convergence_threshold(const std::string& arch);
std::vector<std::string> ibm_architectures();

struct ExperimentSpec {
  std::string arch;
  std::vector<std::size_t> gate_counts;
  std::size_t circuits_per_point = 20;
  std::uint64_t rng_seed = 42;
  PlacementMode placement = PlacementMode::Lazy;
  std::size_t threads = 1;
};

struct ExperimentRow {
  std::string arch;
  std::size_t input_gates = 0;
  std::size_t trial = 0;
  std::size_t h = 0;
  std::size_t s = 0;
  std::size_t cx = 0;
  std::size_t cx_fully_connected = 0;
  double wall_time_ms = 0.0;
};

/// Runs every (gate count, trial) point: random circuit -> tableau ->
/// synthesis on the target and on the complete graph of the same size, both
/// verified for round-trip and connectivity. Rows come back sorted by
/// (input_gates, trial). Throws std::runtime_error naming the seed of any
/// failing trial, std::invalid_argument for a malformed spec.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

struct SummaryRow {
  std::string arch;
  /// Input gate count, or "converged" for the pooled plateau bucket.
  std::string bucket;
  std::size_t trials = 0;
  double median_h = 0;
  double median_s = 0;
  double median_cx = 0;
  double median_cx_fc = 0;
  /// Mean of the per-circuit routing portions.
  double routing_portion = 0;
  /// Median complete-graph CX count over n^2 / log2(n) and over n^2.
  double cx_fc_over_bound_l = 0;
  double cx_fc_over_bound_u = 0;
};

/// One row per gate count, plus a "converged" row pooling every input at or
/// above `converged_from` when given.
std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows, std::size_t num_qubits,
                                  std::optional<std::size_t> converged_from);

double median(std::vector<double> values);

/// Header: arch,input_gates,trial,h,s,cx,cx_fc,wall_time_ms
void write_rows_csv(std::ostream& os, const std::vector<ExperimentRow>& rows, bool header = true);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows, bool header = true);

/// Parses "start:stop:step" (inclusive stop) or a comma-separated list.
std::vector<std::size_t> parse_gate_counts(const std::string& text);

}  // namespace cliffsynth
