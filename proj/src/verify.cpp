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

#include "cliffsynth/verify.hpp"

#include <cmath>
#include <stdexcept>

namespace cliffsynth {

Circuit relabel_to_logical(const Circuit& physical, const std::vector<std::size_t>& mapping) {
  const std::size_t n = physical.num_qubits();
  if (mapping.size() != n) throw std::invalid_argument("relabel: mapping size mismatch");
  std::vector<std::size_t> to_logical(n, n);
  for (std::size_t q = 0; q < n; ++q) {
    if (mapping[q] >= n || to_logical[mapping[q]] != n) {
      throw std::invalid_argument("relabel: mapping is not a bijection");
    }
    to_logical[mapping[q]] = q;
  }
  Circuit out(n);
  for (Gate g : physical.gates()) {
    g.q0 = to_logical[g.q0];
    if (g.is_two_qubit()) g.q1 = to_logical[g.q1];
    out.add(g);
  }
  return out;
}

bool check_roundtrip(const CliffordTableau& original, const SynthesisResult& result) {
  if (result.circuit.num_qubits() != original.num_qubits()) {
    throw std::invalid_argument("check_roundtrip: qubit count mismatch");
  }
  return from_circuit(relabel_to_logical(result.circuit, result.mapping)) == original;
}

std::vector<ConnectivityViolation> check_connectivity(const Circuit& c, const CouplingGraph& g) {
  std::vector<ConnectivityViolation> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& gate = c.gates()[i];
    if (gate.is_two_qubit() && !g.has_edge(gate.q0, gate.q1)) out.push_back({i, gate});
  }
  return out;
}

Amplitudes simulate(const Circuit& c, Amplitudes state) {
  const std::size_t n = c.num_qubits();
  if (n > kMaxOracleQubits) {
    throw std::invalid_argument("state-vector oracle limited to " +
                                std::to_string(kMaxOracleQubits) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << n;
  if (state.size() != dim) throw std::invalid_argument("simulate: state has the wrong dimension");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const std::complex<double> i_unit(0.0, 1.0);
  for (const Gate& g : c.gates()) {
    const std::size_t m0 = std::size_t{1} << g.q0;
    switch (g.kind) {
      case GateKind::H:
        for (std::size_t k = 0; k < dim; ++k) {
          if (k & m0) continue;
          const auto a = state[k], b = state[k | m0];
          state[k] = (a + b) * inv_sqrt2;
          state[k | m0] = (a - b) * inv_sqrt2;
        }
        break;
      case GateKind::S:
        for (std::size_t k = 0; k < dim; ++k) {
          if (k & m0) state[k] *= i_unit;
        }
        break;
      case GateKind::CX: {
        const std::size_t m1 = std::size_t{1} << g.q1;
        for (std::size_t k = 0; k < dim; ++k) {
          if ((k & m0) && !(k & m1)) std::swap(state[k], state[k | m1]);
        }
        break;
      }
    }
  }
  return state;
}

Amplitudes statevector_oracle(const Circuit& c) {
  if (c.num_qubits() > kMaxOracleQubits) {
    throw std::invalid_argument("state-vector oracle limited to " +
                                std::to_string(kMaxOracleQubits) + " qubits");
  }
  Amplitudes zero(std::size_t{1} << c.num_qubits(), 0.0);
  zero[0] = 1.0;
  return simulate(c, std::move(zero));
}

namespace {

// Applies the signed Pauli of tableau row `row` to basis vector |k>.
// Returns the phase and writes the image index.
std::complex<double> apply_row_pauli(const CliffordTableau& t, std::size_t row, std::size_t k,
                                     std::size_t& image) {
  std::complex<double> phase = t.sign(row) ? -1.0 : 1.0;
  image = k;
  for (std::size_t q = 0; q < t.num_qubits(); ++q) {
    const bool x = t.x(row, q), z = t.z(row, q);
    const bool b = (k >> q) & 1U;
    if (z && b) phase = -phase;
    if (x && z) phase *= std::complex<double>(0.0, 1.0);  // Y|b> = i (-1)^b |1-b>
    if (x) image ^= std::size_t{1} << q;
  }
  return phase;
}

}  // namespace

bool unitary_matches_tableau(const Circuit& c, const CliffordTableau& t, double tolerance) {
  const std::size_t n = c.num_qubits();
  if (t.num_qubits() != n) throw std::invalid_argument("qubit count mismatch");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Amplitudes> columns;  // columns[k] = U |k>
  columns.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    Amplitudes e(dim, 0.0);
    e[k] = 1.0;
    columns.push_back(simulate(c, std::move(e)));
  }
  // U P = Q U, checked column by column.
  for (std::size_t row = 0; row < 2 * n; ++row) {
    const std::size_t q = row % n;
    const bool basis_is_x = row < n;
    for (std::size_t k = 0; k < dim; ++k) {
      const bool bit = (k >> q) & 1U;
      const Amplitudes& lhs_col = columns[basis_is_x ? (k ^ (std::size_t{1} << q)) : k];
      const double lhs_phase = (!basis_is_x && bit) ? -1.0 : 1.0;
      Amplitudes rhs(dim, 0.0);
      for (std::size_t m = 0; m < dim; ++m) {
        std::size_t image = 0;
        const auto phase = apply_row_pauli(t, row, m, image);
        rhs[image] += phase * columns[k][m];
      }
      for (std::size_t m = 0; m < dim; ++m) {
        if (std::abs(lhs_phase * lhs_col[m] - rhs[m]) > tolerance) return false;
      }
    }
  }
  return true;
}

}  // namespace cliffsynth
