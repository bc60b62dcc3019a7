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
#include <string>
#include <string_view>

#include "cliffsynth/bit_matrix.hpp"
#include "cliffsynth/circuit.hpp"

namespace cliffsynth {

/// Clifford tableau of an n-qubit Clifford unitary U.
///
/// Row q (0 <= q < n) is the destabilizer U X_q U^dagger, row n + q the
/// stabilizer U Z_q U^dagger. Columns 0..n-1 hold the X-part and n..2n-1
/// the Z-part, so qubit j of a row reads (x, z) = (col j, col n + j) with
/// (1, 0) = X, (0, 1) = Z, (1, 1) = Y. Each row carries a sign bit:
/// the row represents (-1)^sign times the Hermitian Pauli product.
///
/// The bit-vector encoding that lists Z bits before X bits is the same data
/// with the two column halves exchanged.
class CliffordTableau {
 public:
  /// Identity tableau. Throws std::invalid_argument for n == 0.
  explicit CliffordTableau(std::size_t n);
  CliffordTableau(BitMatrix table, BitVector signs);

  static CliffordTableau identity(std::size_t n) { return CliffordTableau(n); }

  std::size_t num_qubits() const { return n_; }
  std::size_t destab_row(std::size_t q) const { return q; }
  std::size_t stab_row(std::size_t q) const { return n_ + q; }

  bool x(std::size_t row, std::size_t q) const { return table_.get(row, q); }
  bool z(std::size_t row, std::size_t q) const { return table_.get(row, n_ + q); }
  bool sign(std::size_t row) const { return signs_.get(row); }
  /// True iff row `row` acts non-trivially on qubit `q`.
  bool acts_on(std::size_t row, std::size_t q) const { return x(row, q) || z(row, q); }

  const BitMatrix& table() const { return table_; }
  const BitVector& signs() const { return signs_; }
  // Raw access, used by tests that build invalid tableaus on purpose.
  BitMatrix& mutable_table() { return table_; }
  BitVector& mutable_signs() { return signs_; }

  /// Right-multiplies by `g`: the result represents "this, then g".
  /// Column updates plus the standard per-row sign rules.
  void append(const Gate& g);

  /// Left-multiplies by `g`: the result represents "g, then this".
  /// Row swaps and row products with exact phase tracking.
  void prepend(const Gate& g);

  bool table_is_identity() const;

  friend bool operator==(const CliffordTableau&, const CliffordTableau&) = default;

 private:
  std::size_t n_ = 0;
  BitMatrix table_;
  BitVector signs_;
};

CliffordTableau from_circuit(const Circuit& c);

/// "Apply a, then b". Throws std::invalid_argument on size mismatch.
CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b);

/// Inverse with exact signs: compose(t, inverse(t)) == identity.
/// Throws std::invalid_argument if t is not symplectic.
CliffordTableau inverse(const CliffordTableau& t);

/// Checks the pairwise commutation structure of all 2n rows, plus shape.
bool is_symplectic(const CliffordTableau& t);

// Text form: a header line "n=<n>" followed by 2n rows (destabilizers first),
// each holding 2n characters in {0,1} (X-part then Z-part), a space and the
// sign character '+' or '-'. The parser also accepts '0'/'1' signs and no
// separating space.
std::string to_text(const CliffordTableau& t);
CliffordTableau parse_tableau(std::string_view text);
CliffordTableau read_tableau_file(const std::string& path);
void write_tableau_file(const CliffordTableau& t, const std::string& path);

}  // namespace cliffsynth
