// Copyright 2026 The qinterleave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qinterleave {

enum class GateKind { H, CNOT, SWAP };

/// One gate. For CNOT, `a` is the control and `b` the target; H ignores `b`.
struct Gate {
  GateKind kind;
  std::size_t a;
  std::size_t b = 0;

  static Gate h(std::size_t q) { return {GateKind::H, q, 0}; }
  static Gate cnot(std::size_t control, std::size_t target) { return {GateKind::CNOT, control, target}; }
  static Gate swap(std::size_t a, std::size_t b) { return {GateKind::SWAP, a, b}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  explicit Circuit(std::size_t width) : width_(width) {}

  /// Throws std::invalid_argument on out-of-range or coinciding operands.
  void append(const Gate& gate) {
    if (gate.a >= width_ || (gate.kind != GateKind::H && gate.b >= width_)) {
      throw std::invalid_argument("circuit: gate operand out of range for width " +
                                  std::to_string(width_));
    }
    if (gate.kind != GateKind::H && gate.a == gate.b) {
      throw std::invalid_argument("circuit: two-qubit gate with identical operands");
    }
    gates_.push_back(gate);
  }

  std::size_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }

  std::size_t count(GateKind kind) const {
    std::size_t c = 0;
    for (const Gate& g : gates_) c += g.kind == kind;
    return c;
  }

  /// The same circuit with every SWAP(a,b) replaced by CNOT(a,b) CNOT(b,a) CNOT(a,b).
  Circuit expand_swaps() const {
    Circuit out(width_);
    for (const Gate& g : gates_) {
      if (g.kind == GateKind::SWAP) {
        out.append(Gate::cnot(g.a, g.b));
        out.append(Gate::cnot(g.b, g.a));
        out.append(Gate::cnot(g.a, g.b));
      } else {
        out.append(g);
      }
    }
    return out;
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t width_;
  std::vector<Gate> gates_;
};

/// Every SWAP counts as three CNOTs.
inline std::size_t cnot_count(const Circuit& circuit) {
  return 3 * circuit.count(GateKind::SWAP) + circuit.count(GateKind::CNOT);
}

enum class CircuitFormat { plain, qasm };

/// plain: "qubits N" then one gate per line ("SWAP a b", "CNOT c t", "H q"),
/// 0-based, LF-terminated. qasm: OPENQASM 2.0 listing using only h and cx;
/// swaps are always expanded.
inline std::string export_circuit(const Circuit& circuit, CircuitFormat format) {
  std::ostringstream out;
  if (format == CircuitFormat::plain) {
    out << "qubits " << circuit.width() << '\n';
    for (const Gate& g : circuit.gates()) {
      switch (g.kind) {
        case GateKind::H:
          out << "H " << g.a << '\n';
          break;
        case GateKind::CNOT:
          out << "CNOT " << g.a << ' ' << g.b << '\n';
          break;
        case GateKind::SWAP:
          out << "SWAP " << g.a << ' ' << g.b << '\n';
          break;
      }
    }
    return out.str();
  }
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.width() << "];\n";
  const Circuit expanded = circuit.expand_swaps();
  for (const Gate& g : expanded.gates()) {
    if (g.kind == GateKind::H) {
      out << "h q[" << g.a << "];\n";
    } else {
      out << "cx q[" << g.a << "],q[" << g.b << "];\n";
    }
  }
  return out.str();
}

/// Inverse of the plain export. Throws std::invalid_argument on malformed input.
inline Circuit parse_plain_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("circuit: missing header");
  std::istringstream header(line);
  std::string word;
  std::size_t width = 0;
  if (!(header >> word >> width) || word != "qubits") {
    throw std::invalid_argument("circuit: expected 'qubits N' header");
  }
  Circuit circuit(width);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string name;
    std::size_t a = 0;
    std::size_t b = 0;
    fields >> name;
    bool ok = static_cast<bool>(fields >> a);
    if (name == "H") {
      if (ok) circuit.append(Gate::h(a));
    } else if (name == "CNOT" || name == "SWAP") {
      ok = ok && static_cast<bool>(fields >> b);
      if (ok) circuit.append(name == "CNOT" ? Gate::cnot(a, b) : Gate::swap(a, b));
    } else {
      ok = false;
    }
    std::string rest;
    if (!ok || (fields >> rest)) {
      throw std::invalid_argument("circuit: malformed line " + std::to_string(line_no) + ": '" +
                                  line + "'");
    }
  }
  return circuit;
}

}  // namespace qinterleave
