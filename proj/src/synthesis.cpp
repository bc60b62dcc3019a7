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

#include "cliffsynth/synthesis.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cliffsynth {

PlacementMode parse_placement_mode(const std::string& text) {
  if (text == "identity") return PlacementMode::Identity;
  if (text == "lazy") return PlacementMode::Lazy;
  throw std::invalid_argument("unknown placement mode '" + text + "' (expected identity|lazy)");
}

std::string to_string(PlacementMode mode) {
  return mode == PlacementMode::Identity ? "identity" : "lazy";
}

// QubitMapping -------------------------------------------------------------

QubitMapping::QubitMapping(std::size_t num_logical, std::size_t num_physical, bool lazy)
    : lazy_(lazy), to_physical_(num_logical), to_logical_(num_physical) {
  if (num_logical > num_physical) {
    throw std::invalid_argument("more logical qubits than physical vertices");
  }
}

QubitMapping QubitMapping::identity(std::size_t n) {
  QubitMapping m(n, n, false);
  for (std::size_t q = 0; q < n; ++q) m.bind(q, q);
  return m;
}

QubitMapping QubitMapping::lazy(std::size_t num_logical, std::size_t num_physical) {
  return QubitMapping(num_logical, num_physical, true);
}

std::size_t QubitMapping::physical(std::size_t q) const {
  const auto& v = to_physical_.at(q);
  if (!v) throw std::logic_error("qubit " + std::to_string(q) + " is not mapped");
  return *v;
}

std::vector<std::size_t> QubitMapping::free_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < to_logical_.size(); ++v) {
    if (!to_logical_[v]) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> QubitMapping::unmapped_qubits() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < to_physical_.size(); ++q) {
    if (!to_physical_[q]) out.push_back(q);
  }
  return out;
}

void QubitMapping::bind(std::size_t q, std::size_t v) {
  if (to_physical_.at(q)) throw std::logic_error("qubit " + std::to_string(q) + " already mapped");
  if (to_logical_.at(v)) throw std::logic_error("vertex " + std::to_string(v) + " already used");
  to_physical_[q] = v;
  to_logical_[v] = q;
}

bool QubitMapping::complete() const {
  return std::all_of(to_physical_.begin(), to_physical_.end(),
                     [](const auto& v) { return v.has_value(); });
}

std::vector<std::size_t> QubitMapping::to_vector() const {
  std::vector<std::size_t> out;
  out.reserve(to_physical_.size());
  for (std::size_t q = 0; q < to_physical_.size(); ++q) out.push_back(physical(q));
  return out;
}

// Pivot selection ------------------------------------------------------------

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Smallest distance from `v` to any free vertex other than `v`.
std::size_t nearest_free(std::size_t v, const DistanceMatrix& dist,
                         const std::vector<std::size_t>& free) {
  std::size_t best = kNone;
  for (std::size_t f : free) {
    if (f != v) best = std::min(best, dist[v][f]);
  }
  return best;
}

// Smallest distance between two distinct free vertices.
std::size_t closest_free_pair(const DistanceMatrix& dist, const std::vector<std::size_t>& free) {
  std::size_t best = kNone;
  for (std::size_t a = 0; a < free.size(); ++a) {
    for (std::size_t b = a + 1; b < free.size(); ++b) best = std::min(best, dist[free[a]][free[b]]);
  }
  return best;
}

std::size_t interaction_weight(const CliffordTableau& t, std::size_t r, std::size_t i) {
  return static_cast<std::size_t>(t.acts_on(t.destab_row(r), i)) +
         static_cast<std::size_t>(t.acts_on(t.stab_row(r), i));
}

}  // namespace

std::size_t pivot_cost(const CliffordTableau& t, std::size_t r, const DistanceMatrix& dist,
                       const QubitMapping& mapping) {
  const std::size_t n = t.num_qubits();
  if (r >= n) throw std::out_of_range("pivot_cost: qubit out of range");
  std::vector<std::size_t> free;
  std::size_t free_pair = kNone;
  bool free_ready = false;
  const auto ensure_free = [&] {
    if (!mapping.allows_unmapped()) {
      throw std::logic_error("pivot_cost: unmapped qubit under identity placement");
    }
    if (!free_ready) {
      free = mapping.free_vertices();
      free_pair = closest_free_pair(dist, free);
      free_ready = true;
    }
  };

  std::size_t cost = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == r) continue;
    const std::size_t w = interaction_weight(t, r, i);
    if (w == 0) continue;
    std::size_t d = 0;
    const bool r_mapped = mapping.is_mapped(r), i_mapped = mapping.is_mapped(i);
    if (r_mapped && i_mapped) {
      d = dist[mapping.physical(r)][mapping.physical(i)];
    } else if (r_mapped || i_mapped) {
      ensure_free();
      d = nearest_free(mapping.physical(r_mapped ? r : i), dist, free);
    } else {
      ensure_free();
      d = free_pair;
    }
    if (d == kNone) throw std::logic_error("pivot_cost: no free vertex for an unmapped qubit");
    cost += w * d;
  }
  return cost;
}

namespace {

// Best free non-cutting vertex for an unbound pivot: closest (weighted) to
// the bound qubits its rows interact with.
std::size_t place_pivot(const CliffordTableau& t, std::size_t r, const DistanceMatrix& dist,
                        const QubitMapping& mapping, const std::vector<std::size_t>& candidates) {
  std::size_t best_vertex = kNone, best_cost = kNone;
  for (std::size_t v : candidates) {
    std::size_t cost = 0;
    for (std::size_t i = 0; i < t.num_qubits(); ++i) {
      if (i != r && mapping.is_mapped(i)) cost += interaction_weight(t, r, i) * dist[v][mapping.physical(i)];
    }
    if (cost < best_cost) {
      best_cost = cost;
      best_vertex = v;
    }
  }
  return best_vertex;
}

}  // namespace

PivotChoice pick_pivot(const CliffordTableau& t, const CouplingGraph& g, const VertexMask& alive,
                       const QubitMapping& mapping, const SynthesisConfig& cfg) {
  const std::size_t n = t.num_qubits();
  const std::vector<std::size_t> open = non_cutting(g, alive);
  std::vector<bool> open_mask(g.num_qubits(), false);
  for (std::size_t v : open) open_mask[v] = true;
  std::vector<std::size_t> free_open;
  if (mapping.allows_unmapped()) {
    for (std::size_t v : open) {
      if (mapping.is_free(v)) free_open.push_back(v);
    }
  }

  std::size_t best = kNone, best_cost = kNone;
  for (std::size_t q = 0; q < n; ++q) {
    if (mapping.is_mapped(q)) {
      const std::size_t v = mapping.physical(q);
      if (!alive[v] || !open_mask[v]) continue;
    } else if (free_open.empty()) {
      continue;
    }
    if (cfg.pivot_rule == PivotRule::FixedOrder) {
      best = q;
      break;
    }
    const std::size_t cost = pivot_cost(t, q, g.distances(), mapping);
    if (cost < best_cost) {
      best_cost = cost;
      best = q;
    }
  }
  if (best == kNone) throw std::logic_error("pick_pivot: no eligible pivot");
  if (mapping.is_mapped(best)) return {best, mapping.physical(best)};
  return {best, place_pivot(t, best, g.distances(), mapping, free_open)};
}

// Row reduction --------------------------------------------------------------

namespace {

void apply(CliffordTableau& t, std::vector<Gate>& out, const Gate& g) {
  t.append(g);
  out.push_back(g);
}

bool row_is_single(const CliffordTableau& t, std::size_t row, std::size_t p, bool z_half) {
  for (std::size_t i = 0; i < t.num_qubits(); ++i) {
    const bool want = (i == p);
    if ((z_half ? t.z(row, i) : t.x(row, i)) != want) return false;
    if (z_half ? t.x(row, i) : t.z(row, i)) return false;
  }
  return true;
}

// Binds every unbound qubit in `qubits` to the free vertex with the smallest
// summed distance to the already bound ones (ties: lowest vertex).
void bind_terminals(const std::vector<std::size_t>& qubits, const DistanceMatrix& dist,
                    QubitMapping& mapping) {
  for (std::size_t q : qubits) {
    if (mapping.is_mapped(q)) continue;
    std::size_t best_vertex = kNone, best_cost = kNone;
    for (std::size_t v : mapping.free_vertices()) {
      std::size_t cost = 0;
      for (std::size_t other : qubits) {
        if (mapping.is_mapped(other)) cost += dist[v][mapping.physical(other)];
      }
      if (cost < best_cost) {
        best_cost = cost;
        best_vertex = v;
      }
    }
    if (best_vertex == kNone) throw std::logic_error("no free vertex left to bind qubit");
    mapping.bind(q, best_vertex);
  }
}

// Reduces row `row` (whose other half is already zero) to the single bit of
// qubit p, using CNOTs along a Steiner tree. For the X-half the fill pass
// adds child into parent with CX(child, parent) and the clear pass uses
// CX(parent, child); the Z-half reverses both directions.
std::vector<Gate> reduce_row(CliffordTableau& t, std::size_t p, std::size_t row, bool z_half,
                             const CouplingGraph& g, const VertexMask& alive,
                             QubitMapping& mapping) {
  const std::size_t n = t.num_qubits();
  const auto bit = [&](std::size_t q) { return z_half ? t.z(row, q) : t.x(row, q); };

  std::vector<std::size_t> terminals{p};
  std::vector<bool> in_support(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (bit(i)) {
      in_support[i] = true;
      if (i != p) terminals.push_back(i);
    }
  }
  std::vector<Gate> out;
  if (terminals.size() == 1 && in_support[p]) return out;

  bind_terminals(terminals, g.distances(), mapping);
  std::vector<std::size_t> terminal_vertices;
  for (std::size_t q : terminals) terminal_vertices.push_back(mapping.physical(q));
  const SteinerTree tree = steiner_tree(g, alive, terminal_vertices, mapping.physical(p));

  // Steiner vertices that carry no qubit yet receive an unbound one; prefer
  // qubits the stabilizer row of p still touches.
  for (std::size_t v : tree.vertices()) {
    if (!mapping.is_free(v)) continue;
    std::vector<std::size_t> pool = mapping.unmapped_qubits();
    if (pool.empty()) throw std::logic_error("no unbound qubit left for a Steiner vertex");
    auto it = std::find_if(pool.begin(), pool.end(),
                           [&](std::size_t q) { return t.acts_on(t.stab_row(p), q); });
    mapping.bind(it != pool.end() ? *it : pool.front(), v);
  }

  const auto logical = [&](std::size_t v) { return *mapping.logical(v); };
  const auto cnot = [&](std::size_t from, std::size_t into) {
    // Adds the row entry of `from` into `into`.
    return z_half ? Gate::cx(into, from) : Gate::cx(from, into);
  };

  for (const auto& [parent_v, child_v] : tree.bottom_up_order) {
    const std::size_t parent = logical(parent_v), child = logical(child_v);
    if (!in_support[parent] && !bit(parent)) apply(t, out, cnot(child, parent));
  }
  for (const auto& [parent_v, child_v] : tree.bottom_up_order) {
    apply(t, out, cnot(logical(parent_v), logical(child_v)));
  }
  if (!row_is_single(t, row, p, z_half)) {
    throw std::logic_error("Steiner reduction left residual interactions on row " +
                           std::to_string(row));
  }
  return out;
}

}  // namespace

std::vector<Gate> sanitize_destab(CliffordTableau& t, std::size_t p) {
  std::vector<Gate> out;
  const std::size_t row = t.destab_row(p);
  for (std::size_t i = 0; i < t.num_qubits(); ++i) {
    if (t.z(row, i)) apply(t, out, t.x(row, i) ? Gate::s(i) : Gate::h(i));
  }
  return out;
}

std::vector<Gate> remove_interactions_destab(CliffordTableau& t, std::size_t p,
                                             const CouplingGraph& g, const VertexMask& alive,
                                             QubitMapping& mapping) {
  const std::size_t row = t.destab_row(p);
  if (!t.table().row_range_zero(row, t.num_qubits(), 2 * t.num_qubits())) {
    throw std::logic_error("remove_interactions_destab: row is not sanitized");
  }
  return reduce_row(t, p, row, false, g, alive, mapping);
}

std::vector<Gate> sanitize_stab(CliffordTableau& t, std::size_t p) {
  if (!row_is_single(t, t.destab_row(p), p, false)) {
    throw std::logic_error("sanitize_stab: destabilizer row is not X on the pivot");
  }
  std::vector<Gate> out;
  const std::size_t row = t.stab_row(p);
  if (t.x(row, p)) {
    // Y on the pivot; S then H would disturb the destabilizer.
    apply(t, out, Gate::h(p));
    apply(t, out, Gate::s(p));
    apply(t, out, Gate::h(p));
  }
  for (std::size_t i = 0; i < t.num_qubits(); ++i) {
    if (i == p || !t.x(row, i)) continue;
    if (t.z(row, i)) apply(t, out, Gate::s(i));
    apply(t, out, Gate::h(i));
  }
  return out;
}

std::vector<Gate> remove_interactions_stab(CliffordTableau& t, std::size_t p,
                                           const CouplingGraph& g, const VertexMask& alive,
                                           QubitMapping& mapping) {
  const std::size_t row = t.stab_row(p);
  if (!t.table().row_range_zero(row, 0, t.num_qubits()) || !t.z(row, p)) {
    throw std::logic_error("remove_interactions_stab: row is not sanitized");
  }
  return reduce_row(t, p, row, true, g, alive, mapping);
}

std::vector<Gate> sanitize_signs(CliffordTableau& t) {
  if (!t.table_is_identity()) throw std::logic_error("sanitize_signs: table is not the identity");
  std::vector<Gate> out;
  for (std::size_t q = 0; q < t.num_qubits(); ++q) {
    if (t.sign(t.destab_row(q))) {
      // Z_q = S S anticommutes with X_q.
      apply(t, out, Gate::s(q));
      apply(t, out, Gate::s(q));
    }
  }
  for (std::size_t q = 0; q < t.num_qubits(); ++q) {
    if (t.sign(t.stab_row(q))) {
      // X_q = H S S H anticommutes with Z_q.
      apply(t, out, Gate::h(q));
      apply(t, out, Gate::s(q));
      apply(t, out, Gate::s(q));
      apply(t, out, Gate::h(q));
    }
  }
  return out;
}

// Driver -------------------------------------------------------------------------

namespace {

// Emits logical gates onto physical vertices. Single-qubit gates on unbound
// qubits are held back until the qubit is bound; nothing else touches such a
// qubit in the meantime, so the deferral commutes.
class Emitter {
 public:
  Emitter(std::size_t num_logical, std::size_t num_physical, const QubitMapping& mapping)
      : mapping_(mapping), pending_(num_logical), circuit_(num_physical) {}

  void emit(const std::vector<Gate>& gates) {
    for (const Gate& g : gates) emit(g);
  }

  void emit(const Gate& g) {
    if (g.is_two_qubit()) {
      flush(g.q0);
      flush(g.q1);
      circuit_.cx(mapping_.physical(g.q0), mapping_.physical(g.q1));
    } else if (!mapping_.is_mapped(g.q0)) {
      pending_[g.q0].push_back(g);
    } else {
      flush(g.q0);
      Gate physical = g;
      physical.q0 = mapping_.physical(g.q0);
      circuit_.add(physical);
    }
  }

  Circuit finish() {
    for (std::size_t q = 0; q < pending_.size(); ++q) flush(q);
    return std::move(circuit_);
  }

 private:
  void flush(std::size_t q) {
    if (pending_[q].empty()) return;
    const std::size_t v = mapping_.physical(q);
    for (Gate g : pending_[q]) {
      g.q0 = v;
      circuit_.add(g);
    }
    pending_[q].clear();
  }

  const QubitMapping& mapping_;
  std::vector<std::vector<Gate>> pending_;
  Circuit circuit_;
};

}  // namespace

SynthesisResult synthesize(const CliffordTableau& t, const CouplingGraph& g,
                           const SynthesisConfig& cfg) {
  const std::size_t n = t.num_qubits();
  if (g.num_qubits() != n) {
    throw std::invalid_argument("synthesize: tableau has " + std::to_string(n) +
                                " qubits but the graph has " + std::to_string(g.num_qubits()));
  }
  if (!is_symplectic(t)) throw std::invalid_argument("synthesize: tableau is not symplectic");

  // Reducing t^-1 to the identity yields a circuit for t.
  CliffordTableau work = inverse(t);
  QubitMapping mapping = cfg.placement == PlacementMode::Identity ? QubitMapping::identity(n)
                                                                  : QubitMapping::lazy(n, n);
  Emitter emitter(n, g.num_qubits(), mapping);
  VertexMask alive = g.all_vertices();

  for (std::size_t iteration = 0; iteration < n; ++iteration) {
    const PivotChoice pivot = pick_pivot(work, g, alive, mapping, cfg);
    const std::size_t p = pivot.qubit;
    if (!mapping.is_mapped(p)) mapping.bind(p, pivot.vertex);

    emitter.emit(sanitize_destab(work, p));
    emitter.emit(remove_interactions_destab(work, p, g, alive, mapping));
    emitter.emit(sanitize_stab(work, p));
    emitter.emit(remove_interactions_stab(work, p, g, alive, mapping));
    alive[mapping.physical(p)] = false;
  }
  emitter.emit(sanitize_signs(work));

  SynthesisResult result;
  result.circuit = emitter.finish();
  result.mapping = mapping.to_vector();
  result.counts = count_gates(result.circuit);
  return result;
}

}  // namespace cliffsynth
