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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cliffsynth {

enum class GateKind { H, S, CX };

/// A gate from {H, S, CX}. For CX, `q0` is the control and `q1` the target;
/// single-qubit gates leave `q1` unused.
struct Gate {
  GateKind kind = GateKind::H;
  std::size_t q0 = 0;
  std::size_t q1 = 0;

  static Gate h(std::size_t q) { return {GateKind::H, q, 0}; }
  static Gate s(std::size_t q) { return {GateKind::S, q, 0}; }
  static Gate cx(std::size_t control, std::size_t target) {
    return {GateKind::CX, control, target};
  }

  bool is_two_qubit() const { return kind == GateKind::CX; }

  friend bool operator==(const Gate& a, const Gate& b) {
    return a.kind == b.kind && a.q0 == b.q0 &&
           (a.kind != GateKind::CX || a.q1 == b.q1);
  }
};

std::string to_string(const Gate& g);

struct GateCounts {
  std::size_t h = 0;
  std::size_t s = 0;
  std::size_t cx = 0;

  std::size_t total() const { return h + s + cx; }
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Ordered gate list on a fixed number of qubits. `add` validates indices,
/// so every stored gate satisfies q < num_qubits and control != target.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}
  Circuit(std::size_t num_qubits, const std::vector<Gate>& gates);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit& add(const Gate& g);
  Circuit& h(std::size_t q) { return add(Gate::h(q)); }
  Circuit& s(std::size_t q) { return add(Gate::s(q)); }
  Circuit& cx(std::size_t c, std::size_t t) { return add(Gate::cx(c, t)); }

  /// Appends every gate of `other`; qubit counts must match.
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Throws std::invalid_argument if `g` does not fit on `num_qubits` qubits.
void validate_gate(const Gate& g, std::size_t num_qubits);

GateCounts count_gates(const Circuit& c);

/// c followed by its inverse: reversed order, S replaced by S,S,S.
Circuit append_inverse(const Circuit& c);

/// The inverse circuit alone.
Circuit inverse_circuit(const Circuit& c);

/// OpenQASM 2.0 text with a single `q` register. Export only.
std::string export_qasm(const Circuit& c);

// Native gate-list format:
//
//   qubits <n>
//   # comment
//   h <q>
//   s <q>
//   cx <control> <target>
//
// Blank lines and '#' comments are ignored by the parser. The writer emits
// only the header and one gate per line.
std::string export_gatelist(const Circuit& c);
Circuit parse_gatelist(std::string_view text);

Circuit read_gatelist_file(const std::string& path);
void write_gatelist_file(const Circuit& c, const std::string& path);

}  // namespace cliffsynth
