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

#include "cliffsynth/tableau.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cliffsynth {

namespace {

// Pauli product i^phase * prod_j P_j(x_j, z_j) with separate X/Z words.
struct PauliRow {
  std::vector<Word> x;
  std::vector<Word> z;
  unsigned phase = 0;  // exponent of i, mod 4

  explicit PauliRow(std::size_t n) : x(words_for(n), 0), z(words_for(n), 0) {}

  // *this = *this * other
  void right_multiply(const PauliRow& other) {
    int delta = static_cast<int>(other.phase);
    for (std::size_t w = 0; w < x.size(); ++w) {
      const Word x1 = x[w], z1 = z[w], x2 = other.x[w], z2 = other.z[w];
      const Word p1x = x1 & ~z1, p1y = x1 & z1, p1z = ~x1 & z1;
      const Word p2x = x2 & ~z2, p2y = x2 & z2, p2z = ~x2 & z2;
      // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
      const Word plus = (p1x & p2y) | (p1y & p2z) | (p1z & p2x);
      const Word minus = (p1x & p2z) | (p1y & p2x) | (p1z & p2y);
      delta += std::popcount(plus) - std::popcount(minus);
      x[w] = x1 ^ x2;
      z[w] = z1 ^ z2;
    }
    phase = static_cast<unsigned>(((static_cast<int>(phase) + delta) % 4 + 4) % 4);
  }

  bool get_x(std::size_t q) const { return (x[q / kWordBits] >> (q % kWordBits)) & 1U; }
  bool get_z(std::size_t q) const { return (z[q / kWordBits] >> (q % kWordBits)) & 1U; }
};

PauliRow extract_row(const CliffordTableau& t, std::size_t row) {
  const std::size_t n = t.num_qubits();
  PauliRow p(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (t.x(row, q)) p.x[q / kWordBits] |= Word{1} << (q % kWordBits);
    if (t.z(row, q)) p.z[q / kWordBits] |= Word{1} << (q % kWordBits);
  }
  p.phase = t.sign(row) ? 2 : 0;
  return p;
}

void store_row(CliffordTableau& t, std::size_t row, const PauliRow& p) {
  if (p.phase % 2 != 0) {
    throw std::logic_error("row product produced an imaginary phase");
  }
  const std::size_t n = t.num_qubits();
  BitMatrix& table = t.mutable_table();
  for (std::size_t q = 0; q < n; ++q) {
    table.set(row, q, p.get_x(q));
    table.set(row, n + q, p.get_z(q));
  }
  t.mutable_signs().set(row, p.phase == 2);
}

// The image under `b` of the Pauli `p`, where `b_rows` are b's extracted rows.
PauliRow conjugate(const PauliRow& p, const std::vector<PauliRow>& b_rows, std::size_t n) {
  PauliRow acc(n);
  acc.phase = p.phase;
  for (std::size_t q = 0; q < n; ++q) {
    const bool px = p.get_x(q), pz = p.get_z(q);
    // Y = i X Z
    if (px && pz) acc.phase = (acc.phase + 1) % 4;
    if (px) acc.right_multiply(b_rows[q]);
    if (pz) acc.right_multiply(b_rows[n + q]);
  }
  return acc;
}

}  // namespace

CliffordTableau::CliffordTableau(std::size_t n)
    : n_(n), table_(BitMatrix::identity(2 * n)), signs_(2 * n) {
  if (n == 0) throw std::invalid_argument("tableau needs at least one qubit");
}

CliffordTableau::CliffordTableau(BitMatrix table, BitVector signs)
    : n_(table.rows() / 2), table_(std::move(table)), signs_(std::move(signs)) {
  if (n_ == 0 || table_.rows() != 2 * n_ || table_.cols() != 2 * n_ ||
      signs_.size() != 2 * n_) {
    throw std::invalid_argument("tableau must be 2n x 2n with 2n sign bits, n >= 1");
  }
}

void CliffordTableau::append(const Gate& g) {
  validate_gate(g, n_);
  const std::size_t rows = 2 * n_;
  switch (g.kind) {
    case GateKind::H: {
      const std::size_t q = g.q0;
      for (std::size_t r = 0; r < rows; ++r) {
        if (x(r, q) && z(r, q)) signs_.flip(r);
      }
      table_.swap_columns(q, n_ + q);
      break;
    }
    case GateKind::S: {
      const std::size_t q = g.q0;
      for (std::size_t r = 0; r < rows; ++r) {
        if (x(r, q) && z(r, q)) signs_.flip(r);
      }
      table_.xor_col_into(q, n_ + q);
      break;
    }
    case GateKind::CX: {
      const std::size_t c = g.q0, t = g.q1;
      for (std::size_t r = 0; r < rows; ++r) {
        if (x(r, c) && z(r, t) && (x(r, t) == z(r, c))) signs_.flip(r);
      }
      table_.xor_col_into(c, t);            // x_t ^= x_c
      table_.xor_col_into(n_ + t, n_ + c);  // z_c ^= z_t
      break;
    }
  }
}

void CliffordTableau::prepend(const Gate& g) {
  validate_gate(g, n_);
  switch (g.kind) {
    case GateKind::H: {
      // H X H = Z, H Z H = X
      const std::size_t q = g.q0;
      table_.swap_rows(q, n_ + q);
      const bool sx = signs_.get(q), sz = signs_.get(n_ + q);
      signs_.set(q, sz);
      signs_.set(n_ + q, sx);
      break;
    }
    case GateKind::S: {
      // S X S^dagger = Y = i X Z
      const std::size_t q = g.q0;
      PauliRow row = extract_row(*this, q);
      row.right_multiply(extract_row(*this, n_ + q));
      row.phase = (row.phase + 1) % 4;
      store_row(*this, q, row);
      break;
    }
    case GateKind::CX: {
      // X_c -> X_c X_t, Z_t -> Z_c Z_t
      const std::size_t c = g.q0, t = g.q1;
      PauliRow xc = extract_row(*this, c);
      xc.right_multiply(extract_row(*this, t));
      store_row(*this, c, xc);
      PauliRow zt = extract_row(*this, n_ + c);
      zt.right_multiply(extract_row(*this, n_ + t));
      store_row(*this, n_ + t, zt);
      break;
    }
  }
}

bool CliffordTableau::table_is_identity() const {
  return table_ == BitMatrix::identity(2 * n_);
}

CliffordTableau from_circuit(const Circuit& c) {
  CliffordTableau t(c.num_qubits());
  for (const Gate& g : c.gates()) t.append(g);
  return t;
}

CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b) {
  const std::size_t n = a.num_qubits();
  if (b.num_qubits() != n) throw std::invalid_argument("compose: qubit count mismatch");
  std::vector<PauliRow> b_rows;
  b_rows.reserve(2 * n);
  for (std::size_t r = 0; r < 2 * n; ++r) b_rows.push_back(extract_row(b, r));
  CliffordTableau out(n);
  for (std::size_t r = 0; r < 2 * n; ++r) {
    store_row(out, r, conjugate(extract_row(a, r), b_rows, n));
  }
  return out;
}

CliffordTableau inverse(const CliffordTableau& t) {
  if (!is_symplectic(t)) throw std::invalid_argument("inverse: tableau is not symplectic");
  const std::size_t n = t.num_qubits();
  const auto partner = [n](std::size_t k) { return k < n ? k + n : k - n; };
  // For symplectic M, M^-1 = Omega M^T Omega with Omega swapping the halves.
  BitMatrix table(2 * n, 2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    for (std::size_t j = 0; j < 2 * n; ++j) {
      if (t.table().get(partner(j), partner(i))) table.set(i, j, true);
    }
  }
  CliffordTableau inv(std::move(table), BitVector(2 * n));
  // Each row's image under t is +-(basis Pauli); flipping the row sign
  // flips exactly that image's sign.
  const CliffordTableau probe = compose(inv, t);
  for (std::size_t r = 0; r < 2 * n; ++r) inv.mutable_signs().set(r, probe.sign(r));
  return inv;
}

bool is_symplectic(const CliffordTableau& t) {
  const std::size_t n = t.num_qubits();
  if (n == 0 || t.table().rows() != 2 * n || t.table().cols() != 2 * n) return false;
  std::vector<PauliRow> rows;
  rows.reserve(2 * n);
  for (std::size_t r = 0; r < 2 * n; ++r) rows.push_back(extract_row(t, r));
  for (std::size_t a = 0; a < 2 * n; ++a) {
    for (std::size_t b = a; b < 2 * n; ++b) {
      unsigned parity = 0;
      for (std::size_t w = 0; w < rows[a].x.size(); ++w) {
        parity ^= static_cast<unsigned>(
            std::popcount((rows[a].x[w] & rows[b].z[w]) ^ (rows[a].z[w] & rows[b].x[w])) & 1);
      }
      const bool paired = (b == a + n && a < n);
      if (parity != (paired ? 1U : 0U)) return false;
    }
  }
  return true;
}

std::string to_text(const CliffordTableau& t) {
  const std::size_t n = t.num_qubits();
  std::string out = "n=" + std::to_string(n) + "\n";
  for (std::size_t r = 0; r < 2 * n; ++r) {
    for (std::size_t c = 0; c < 2 * n; ++c) out += t.table().get(r, c) ? '1' : '0';
    out += ' ';
    out += t.sign(r) ? '-' : '+';
    out += '\n';
  }
  return out;
}

CliffordTableau parse_tableau(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    std::string compact;
    for (char ch : line) {
      if (ch == '#') break;
      if (ch != ' ' && ch != '\t' && ch != '\r') compact += ch;
    }
    if (!compact.empty()) lines.push_back(compact);
  }
  if (lines.empty() || lines[0].rfind("n=", 0) != 0) {
    throw std::runtime_error("tableau text: missing 'n=<int>' header");
  }
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(lines[0].substr(2), &used);
    if (used != lines[0].size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw std::runtime_error("tableau text: bad header '" + lines[0] + "'");
  }
  if (n == 0) throw std::runtime_error("tableau text: n must be positive");
  if (lines.size() != 2 * n + 1) {
    throw std::runtime_error("tableau text: expected " + std::to_string(2 * n) +
                             " rows, found " + std::to_string(lines.size() - 1));
  }
  BitMatrix table(2 * n, 2 * n);
  BitVector signs(2 * n);
  for (std::size_t r = 0; r < 2 * n; ++r) {
    const std::string& row = lines[r + 1];
    if (row.size() != 2 * n + 1) {
      throw std::runtime_error("tableau text: row " + std::to_string(r) + " has wrong length");
    }
    for (std::size_t c = 0; c < 2 * n; ++c) {
      if (row[c] != '0' && row[c] != '1') {
        throw std::runtime_error("tableau text: row " + std::to_string(r) + " has a non-binary entry");
      }
      table.set(r, c, row[c] == '1');
    }
    const char s = row[2 * n];
    if (s == '-' || s == '1') {
      signs.set(r, true);
    } else if (s != '+' && s != '0') {
      throw std::runtime_error("tableau text: row " + std::to_string(r) + " has a bad sign character");
    }
  }
  return CliffordTableau(std::move(table), std::move(signs));
}

CliffordTableau read_tableau_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_tableau(buffer.str());
}

void write_tableau_file(const CliffordTableau& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_text(t);
}

}  // namespace cliffsynth
