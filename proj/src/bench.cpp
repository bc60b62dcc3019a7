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

#include "cliffsynth/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "cliffsynth/architecture.hpp"
#include "cliffsynth/tableau.hpp"
#include "cliffsynth/verify.hpp"

namespace cliffsynth {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t gate_count, std::uint64_t trial) {
  return splitmix64(splitmix64(splitmix64(seed) ^ gate_count) ^ trial);
}

Circuit random_clifford_circuit(std::size_t n, std::size_t gates, Rng& rng) {
  if (gates > 0 && n < 2) throw std::invalid_argument("random circuits need at least two qubits");
  Circuit c(n);
  for (std::size_t i = 0; i < gates; ++i) {
    switch (rng.below(3)) {
      case 0:
        c.h(rng.below(n));
        break;
      case 1:
        c.s(rng.below(n));
        break;
      default: {
        const std::size_t control = rng.below(n);
        std::size_t target = rng.below(n - 1);
        if (target >= control) ++target;
        c.cx(control, target);
        break;
      }
    }
  }
  return c;
}

double routing_portion(std::size_t cx_routed, std::size_t cx_fully_connected) {
  if (cx_routed == 0) throw std::invalid_argument("routing_portion: routed CX count is zero");
  return (static_cast<double>(cx_routed) - static_cast<double>(cx_fully_connected)) /
         static_cast<double>(cx_routed);
}

std::optional<std::size_t> convergence_threshold(const std::string& arch) {
  static const std::map<std::string, std::size_t> thresholds = {
      {"quito", 75},  {"nairobi", 110}, {"guadalupe", 250},
      {"mumbai", 500}, {"ithaca", 1250}, {"brisbane", 3000},
  };
  if (auto it = thresholds.find(arch); it != thresholds.end()) return it->second;
  return std::nullopt;
}

std::vector<std::string> ibm_architectures() {
  return {"quito", "nairobi", "guadalupe", "mumbai", "ithaca", "brisbane"};
}

namespace {

ExperimentRow run_trial(const ExperimentSpec& spec, const CouplingGraph& arch,
                        const CouplingGraph& complete, std::size_t gates, std::size_t trial) {
  const std::uint64_t seed = trial_seed(spec.rng_seed, gates, trial);
  Rng rng(seed);
  const Circuit input = random_clifford_circuit(arch.num_qubits(), gates, rng);
  const CliffordTableau tableau = from_circuit(input);
  SynthesisConfig cfg;
  cfg.placement = spec.placement;

  const auto start = std::chrono::steady_clock::now();
  const SynthesisResult routed = synthesize(tableau, arch, cfg);
  const auto stop = std::chrono::steady_clock::now();
  const SynthesisResult full = synthesize(tableau, complete, cfg);

  const auto fail = [&](const std::string& what) {
    std::ostringstream msg;
    msg << what << " (arch " << spec.arch << ", gates " << gates << ", trial " << trial
        << ", seed " << seed << ")";
    throw std::runtime_error(msg.str());
  };
  if (!check_roundtrip(tableau, routed)) fail("round-trip failed on target");
  if (!check_connectivity(routed.circuit, arch).empty()) fail("connectivity violated on target");
  if (!check_roundtrip(tableau, full)) fail("round-trip failed on complete graph");

  ExperimentRow row;
  row.arch = spec.arch;
  row.input_gates = gates;
  row.trial = trial;
  row.h = routed.counts.h;
  row.s = routed.counts.s;
  row.cx = routed.counts.cx;
  row.cx_fully_connected = full.counts.cx;
  row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return row;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  if (spec.gate_counts.empty()) throw std::invalid_argument("experiment needs at least one gate count");
  if (!std::is_sorted(spec.gate_counts.begin(), spec.gate_counts.end()) ||
      std::adjacent_find(spec.gate_counts.begin(), spec.gate_counts.end()) !=
          spec.gate_counts.end()) {
    throw std::invalid_argument("gate counts must be strictly ascending");
  }
  if (spec.circuits_per_point == 0) throw std::invalid_argument("circuits_per_point must be >= 1");
  const CouplingGraph arch = load_graph(spec.arch);
  const CouplingGraph complete = CouplingGraph::complete(arch.num_qubits());

  struct Job {
    std::size_t gates;
    std::size_t trial;
  };
  std::vector<Job> jobs;
  for (std::size_t gates : spec.gate_counts) {
    for (std::size_t trial = 0; trial < spec.circuits_per_point; ++trial) jobs.push_back({gates, trial});
  }

  std::vector<ExperimentRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        rows[i] = run_trial(spec, arch, complete, jobs[i].gates, jobs[i].trial);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(spec.threads, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  std::sort(rows.begin(), rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    return std::tie(a.input_gates, a.trial) < std::tie(b.input_gates, b.trial);
  });
  return rows;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

namespace {

SummaryRow summarize_bucket(const std::vector<const ExperimentRow*>& bucket, std::string arch,
                            std::string label, std::size_t n) {
  std::vector<double> h, s, cx, cx_fc;
  double portion_sum = 0;
  for (const ExperimentRow* r : bucket) {
    h.push_back(static_cast<double>(r->h));
    s.push_back(static_cast<double>(r->s));
    cx.push_back(static_cast<double>(r->cx));
    cx_fc.push_back(static_cast<double>(r->cx_fully_connected));
    portion_sum += r->cx == 0 ? 0.0 : routing_portion(r->cx, r->cx_fully_connected);
  }
  SummaryRow out;
  out.arch = std::move(arch);
  out.bucket = std::move(label);
  out.trials = bucket.size();
  out.median_h = median(h);
  out.median_s = median(s);
  out.median_cx = median(cx);
  out.median_cx_fc = median(cx_fc);
  out.routing_portion = portion_sum / static_cast<double>(bucket.size());
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  out.cx_fc_over_bound_l = n > 1 ? out.median_cx_fc / (nn / std::log2(static_cast<double>(n))) : 0.0;
  out.cx_fc_over_bound_u = out.median_cx_fc / nn;
  return out;
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows, std::size_t num_qubits,
                                  std::optional<std::size_t> converged_from) {
  std::vector<SummaryRow> out;
  if (rows.empty()) return out;
  std::map<std::size_t, std::vector<const ExperimentRow*>> buckets;
  std::vector<const ExperimentRow*> converged;
  for (const ExperimentRow& r : rows) {
    buckets[r.input_gates].push_back(&r);
    if (converged_from && r.input_gates >= *converged_from) converged.push_back(&r);
  }
  const std::string& arch = rows.front().arch;
  for (const auto& [gates, bucket] : buckets) {
    out.push_back(summarize_bucket(bucket, arch, std::to_string(gates), num_qubits));
  }
  if (!converged.empty()) out.push_back(summarize_bucket(converged, arch, "converged", num_qubits));
  return out;
}

void write_rows_csv(std::ostream& os, const std::vector<ExperimentRow>& rows, bool header) {
  if (header) os << "arch,input_gates,trial,h,s,cx,cx_fc,wall_time_ms\n";
  for (const ExperimentRow& r : rows) {
    os << r.arch << ',' << r.input_gates << ',' << r.trial << ',' << r.h << ',' << r.s << ','
       << r.cx << ',' << r.cx_fully_connected << ',' << std::fixed << std::setprecision(3)
       << r.wall_time_ms << std::defaultfloat << '\n';
  }
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows, bool header) {
  if (header) {
    os << "arch,bucket,trials,median_h,median_s,median_cx,median_cx_fc,routing_portion,"
          "cx_fc_over_bound_l,cx_fc_over_bound_u\n";
  }
  for (const SummaryRow& r : rows) {
    os << r.arch << ',' << r.bucket << ',' << r.trials << ',' << std::fixed << std::setprecision(1)
       << r.median_h << ',' << r.median_s << ',' << r.median_cx << ',' << r.median_cx_fc << ','
       << std::setprecision(4) << r.routing_portion << ',' << r.cx_fc_over_bound_l << ',' << r.cx_fc_over_bound_u
       << std::defaultfloat << '\n';
  }
}

std::vector<std::size_t> parse_gate_counts(const std::string& text) {
  const auto to_size = [&](const std::string& s) -> std::size_t {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("bad gate count '" + s + "'");
    return static_cast<std::size_t>(v);
  };
  std::vector<std::size_t> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw std::invalid_argument("gate range must be start:stop:step");
    const std::size_t start = to_size(parts[0]), stop = to_size(parts[1]), step = to_size(parts[2]);
    if (step == 0 || start > stop) throw std::invalid_argument("bad gate range '" + text + "'");
    for (std::size_t g = start; g <= stop; g += step) out.push_back(g);
  } else {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(to_size(part));
  }
  if (out.empty()) throw std::invalid_argument("no gate counts given");
  return out;
}

}  // namespace cliffsynth
