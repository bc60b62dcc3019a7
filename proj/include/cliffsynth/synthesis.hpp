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
#include <optional>
#include <string>
#include <vector>

#include "cliffsynth/architecture.hpp"
#include "cliffsynth/circuit.hpp"
#include "cliffsynth/tableau.hpp"

namespace cliffsynth {

enum class PlacementMode { Identity, Lazy };
enum class PivotRule { Heuristic, FixedOrder };

PlacementMode parse_placement_mode(const std::string& text);
std::string to_string(PlacementMode mode);

struct SynthesisConfig {
  PlacementMode placement = PlacementMode::Lazy;
  PivotRule pivot_rule = PivotRule::Heuristic;
  /// Unused; synthesis is deterministic.
  std::optional<std::uint64_t> seed;
};

/// Partial bijection from logical qubits (tableau indices) to physical
/// vertices. Under identity placement every qubit is bound from the start;
/// under lazy placement qubits are bound as synthesis first needs them.
class QubitMapping {
 public:
  static QubitMapping identity(std::size_t n);
  static QubitMapping lazy(std::size_t num_logical, std::size_t num_physical);

  std::size_t num_logical() const { return to_physical_.size(); }
  std::size_t num_physical() const { return to_logical_.size(); }
  bool allows_unmapped() const { return lazy_; }

  bool is_mapped(std::size_t q) const { return to_physical_.at(q).has_value(); }
  /// Throws std::logic_error for an unbound qubit.
  std::size_t physical(std::size_t q) const;
  std::optional<std::size_t> logical(std::size_t v) const { return to_logical_.at(v); }
  bool is_free(std::size_t v) const { return !to_logical_.at(v).has_value(); }
  std::vector<std::size_t> free_vertices() const;
  std::vector<std::size_t> unmapped_qubits() const;

  /// Binds unmapped qubit `q` to free vertex `v`.
  void bind(std::size_t q, std::size_t v);
  bool complete() const;
  /// Logical -> physical as a plain vector; throws unless complete().
  std::vector<std::size_t> to_vector() const;

 private:
  QubitMapping(std::size_t num_logical, std::size_t num_physical, bool lazy);

  bool lazy_ = false;
  std::vector<std::optional<std::size_t>> to_physical_;
  std::vector<std::optional<std::size_t>> to_logical_;
};

struct SynthesisResult {
  /// Gates on physical vertices; every CX lies on a graph edge.
  Circuit circuit;
  /// mapping[logical] = physical vertex.
  std::vector<std::size_t> mapping;
  GateCounts counts;
};

/// Steiner-cost estimate for pivoting on qubit `r`: the sum over qubits i of
/// dist(r, i) times the number of rows among {destabilizer r, stabilizer r}
/// acting non-trivially on i. Distances involving an unbound qubit use the
/// smallest distance to any free vertex. Throws std::logic_error when an
/// unbound qubit shows up in a mapping that does not allow it.
std::size_t pivot_cost(const CliffordTableau& t, std::size_t r, const DistanceMatrix& dist,
                       const QubitMapping& mapping);

struct PivotChoice {
  std::size_t qubit;
  /// Vertex the pivot sits on, or should be bound to if currently unbound.
  std::size_t vertex;
};

/// Chooses the next pivot among qubits that are unbound (lazy placement) or
/// bound to a non-cutting vertex of the alive subgraph, minimizing
/// pivot_cost (heuristic rule) or taking the lowest index (fixed order).
/// Ties go to the lowest qubit index. Does not modify `mapping`.
PivotChoice pick_pivot(const CliffordTableau& t, const CouplingGraph& g, const VertexMask& alive,
                       const QubitMapping& mapping, const SynthesisConfig& cfg);

// The four per-pivot reduction steps. Each applies the gates it returns to
// `t` (appending) and returns them on logical qubit indices.

/// Clears the Z-half of destabilizer row p with H (X bit clear) or S (X bit set).
std::vector<Gate> sanitize_destab(CliffordTableau& t, std::size_t p);

/// Reduces a sanitized destabilizer row p to X_p with CNOTs along a Steiner
/// tree rooted at p's vertex. Binds unbound terminals (and unbound Steiner
/// vertices) in `mapping`.
std::vector<Gate> remove_interactions_destab(CliffordTableau& t, std::size_t p,
                                             const CouplingGraph& g, const VertexMask& alive,
                                             QubitMapping& mapping);

/// Clears the X-half of stabilizer row p. Requires destabilizer row p == X_p.
std::vector<Gate> sanitize_stab(CliffordTableau& t, std::size_t p);

/// Reduces a sanitized stabilizer row p to Z_p, with CNOT directions
/// reversed relative to the destabilizer pass.
std::vector<Gate> remove_interactions_stab(CliffordTableau& t, std::size_t p,
                                           const CouplingGraph& g, const VertexMask& alive,
                                           QubitMapping& mapping);

/// With the table already the identity, cancels every set sign bit:
/// a negative destabilizer X_q needs Z_q = S S, a negative stabilizer Z_q
/// needs X_q = H S S H. Throws std::logic_error if the table is not identity.
std::vector<Gate> sanitize_signs(CliffordTableau& t);

/// Synthesizes a circuit for `t` whose CNOTs all lie on edges of `g`.
/// Relabeling the returned circuit through result.mapping reproduces `t`
/// exactly, signs included. Throws std::invalid_argument for a
/// non-symplectic tableau or a qubit-count mismatch.
SynthesisResult synthesize(const CliffordTableau& t, const CouplingGraph& g,
                           const SynthesisConfig& cfg = {});

}  // namespace cliffsynth
