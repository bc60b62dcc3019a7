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

#include "cliffsynth/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cliffsynth {

std::string to_string(const Gate& g) {
  switch (g.kind) {
    case GateKind::H:
      return "h " + std::to_string(g.q0);
    case GateKind::S:
      return "s " + std::to_string(g.q0);
    case GateKind::CX:
      return "cx " + std::to_string(g.q0) + " " + std::to_string(g.q1);
  }
  return {};
}

void validate_gate(const Gate& g, std::size_t num_qubits) {
  if (g.q0 >= num_qubits || (g.is_two_qubit() && g.q1 >= num_qubits)) {
    throw std::invalid_argument(
        "gate '" + to_string(g) + "' out of range for " +
        std::to_string(num_qubits) + " qubits");
  }
  if (g.is_two_qubit() && g.q0 == g.q1) {
    throw std::invalid_argument("cx control equals target in '" + to_string(g) + "'");
  }
}

Circuit::Circuit(std::size_t num_qubits, const std::vector<Gate>& gates)
    : num_qubits_(num_qubits) {
  gates_.reserve(gates.size());
  for (const Gate& g : gates) add(g);
}

Circuit& Circuit::add(const Gate& g) {
  validate_gate(g, num_qubits_);
  Gate stored = g;
  if (!stored.is_two_qubit()) stored.q1 = 0;
  gates_.push_back(stored);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("Circuit::append: qubit count mismatch");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::H:
        ++counts.h;
        break;
      case GateKind::S:
        ++counts.s;
        break;
      case GateKind::CX:
        ++counts.cx;
        break;
    }
  }
  return counts;
}

Circuit inverse_circuit(const Circuit& c) {
  Circuit inv(c.num_qubits());
  const auto& gates = c.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    if (it->kind == GateKind::S) {
      // S^dagger = S^3
      inv.add(*it).add(*it).add(*it);
    } else {
      inv.add(*it);
    }
  }
  return inv;
}

Circuit append_inverse(const Circuit& c) {
  Circuit out = c;
  out.append(inverse_circuit(c));
  return out;
}

std::string export_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n"
     << "include \"qelib1.inc\";\n"
     << "qreg q[" << c.num_qubits() << "];\n";
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::H:
        os << "h q[" << g.q0 << "];\n";
        break;
      case GateKind::S:
        os << "s q[" << g.q0 << "];\n";
        break;
      case GateKind::CX:
        os << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
    }
  }
  return os.str();
}

std::string export_gatelist(const Circuit& c) {
  std::ostringstream os;
  os << "qubits " << c.num_qubits() << "\n";
  for (const Gate& g : c.gates()) os << to_string(g) << "\n";
  return os.str();
}

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("gate list line " + std::to_string(line_no) + ": " + what);
}

std::size_t parse_index(std::istringstream& is, std::size_t line_no) {
  long long value = -1;
  if (!(is >> value) || value < 0) parse_error(line_no, "expected a non-negative qubit index");
  return static_cast<std::size_t>(value);
}

}  // namespace

Circuit parse_gatelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Circuit circuit;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    std::transform(op.begin(), op.end(), op.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (!have_header) {
      if (op != "qubits") parse_error(line_no, "expected 'qubits <n>' header");
      circuit = Circuit(parse_index(ls, line_no));
      have_header = true;
    } else {
      Gate g;
      if (op == "h") {
        g = Gate::h(parse_index(ls, line_no));
      } else if (op == "s") {
        g = Gate::s(parse_index(ls, line_no));
      } else if (op == "cx") {
        const std::size_t c = parse_index(ls, line_no);
        g = Gate::cx(c, parse_index(ls, line_no));
      } else {
        parse_error(line_no, "unknown gate '" + op + "'");
      }
      try {
        circuit.add(g);
      } catch (const std::invalid_argument& e) {
        parse_error(line_no, e.what());
      }
    }
    std::string trailing;
    if (ls >> trailing) parse_error(line_no, "unexpected token '" + trailing + "'");
  }
  if (!have_header) throw std::runtime_error("gate list: missing 'qubits <n>' header");
  return circuit;
}

Circuit read_gatelist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_gatelist(buffer.str());
}

void write_gatelist_file(const Circuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << export_gatelist(c);
}

}  // namespace cliffsynth
