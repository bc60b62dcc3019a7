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

#include <complex>
#include <cstddef>
#include <vector>

#include "cliffsynth/architecture.hpp"
#include "cliffsynth/circuit.hpp"
#include "cliffsynth/synthesis.hpp"
#include "cliffsynth/tableau.hpp"

namespace cliffsynth {

/// Rewrites a physical-qubit circuit onto logical qubits, given
/// mapping[logical] = physical. Throws if the mapping is not a bijection
/// onto the circuit's qubits.
Circuit relabel_to_logical(const Circuit& physical, const std::vector<std::size_t>& mapping);

/// True iff the synthesized circuit, relabeled through its mapping,
/// reproduces `original` exactly (signs included).
bool check_roundtrip(const CliffordTableau& original, const SynthesisResult& result);

struct ConnectivityViolation {
  std::size_t gate_index;
  Gate gate;
};

/// Every CX that is not on an edge of `g`, with its position in `c`.
std::vector<ConnectivityViolation> check_connectivity(const Circuit& c, const CouplingGraph& g);

using Amplitudes = std::vector<std::complex<double>>;

inline constexpr std::size_t kMaxOracleQubits = 10;

/// Dense state-vector simulation of `c` from `initial`. Qubit q is bit q of
/// the basis index. Throws std::invalid_argument beyond kMaxOracleQubits.
Amplitudes simulate(const Circuit& c, Amplitudes initial);

/// c applied to |0...0>.
Amplitudes statevector_oracle(const Circuit& c);

/// Checks, using only the dense unitary of `c`, that U P U^dagger equals
/// row r of `t` (as a signed Pauli matrix) for every basis Pauli P = X_q
/// (row q) and Z_q (row n + q). Entries are compared to within `tolerance`.
bool unitary_matches_tableau(const Circuit& c, const CliffordTableau& t,
                             double tolerance = 1e-10);

}  // namespace cliffsynth
