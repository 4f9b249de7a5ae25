// Copyright 2026 The Sparseprep Authors
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

#include "sparseprep/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace sparseprep {

namespace {

void check_pattern(const ControlPattern& pattern) {
  for (size_t i = 0; i < pattern.bits.size(); ++i) {
    const char symbol = pattern.bits[i];
    if (symbol != '0' && symbol != '1' && symbol != 'e') {
      throw std::invalid_argument("control pattern symbol must be 0, 1 or e");
    }
    if (i == pattern.target && symbol != 'e') {
      throw std::invalid_argument("MCRot target coincides with a control");
    }
  }
}

}  // namespace

uint32_t ControlPattern::effective_controls() const {
  uint32_t count = 0;
  for (char symbol : bits) {
    if (symbol != 'e') ++count;
  }
  return count;
}

std::vector<uint32_t> ControlPattern::control_qubits() const {
  std::vector<uint32_t> qubits;
  for (uint32_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 'e') qubits.push_back(i);
  }
  return qubits;
}

uint32_t ControlPattern::hamming_weight() const {
  uint32_t count = 0;
  for (char symbol : bits) {
    if (symbol == '1') ++count;
  }
  return count;
}

bool ControlPattern::matches(uint64_t basis, uint32_t width) const {
  for (uint32_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == 'e') continue;
    const uint64_t bit = (basis >> (width - 1 - i)) & 1;
    if (bit != static_cast<uint64_t>(bits[i] - '0')) return false;
  }
  return true;
}

Gate Gate::x(uint32_t qubit) {
  Gate gate;
  gate.kind = GateKind::X;
  gate.a = qubit;
  return gate;
}

Gate Gate::cnot(uint32_t control, uint32_t target) {
  if (control == target) {
    throw std::invalid_argument("CNOT control equals target");
  }
  Gate gate;
  gate.kind = GateKind::CNOT;
  gate.a = control;
  gate.b = target;
  return gate;
}

Gate Gate::toffoli(uint32_t control1, uint32_t control2, uint32_t target) {
  if (control1 == control2 || control1 == target || control2 == target) {
    throw std::invalid_argument("Toffoli operands must be distinct");
  }
  Gate gate;
  gate.kind = GateKind::Toffoli;
  gate.a = control1;
  gate.b = control2;
  gate.c = target;
  return gate;
}

Gate Gate::ry(double theta, uint32_t qubit) {
  Gate gate;
  gate.kind = GateKind::Ry;
  gate.a = qubit;
  gate.theta = theta;
  return gate;
}

Gate Gate::phase(double phi, uint32_t qubit) {
  Gate gate;
  gate.kind = GateKind::Phase;
  gate.a = qubit;
  gate.phi = phi;
  return gate;
}

Gate Gate::mcrot(ControlPattern pattern, double theta, double phi) {
  check_pattern(pattern);
  Gate gate;
  gate.kind = GateKind::MCRot;
  gate.theta = theta;
  gate.phi = phi;
  gate.pattern = std::move(pattern);
  return gate;
}

uint32_t Gate::max_qubit() const {
  switch (kind) {
    case GateKind::X:
    case GateKind::Ry:
    case GateKind::Phase:
      return a;
    case GateKind::CNOT:
      return std::max(a, b);
    case GateKind::Toffoli:
      return std::max({a, b, c});
    case GateKind::MCRot: {
      uint32_t top = pattern.target;
      for (uint32_t qubit : pattern.control_qubits()) top = std::max(top, qubit);
      return top;
    }
  }
  return 0;
}

void Circuit::push(Gate gate) {
  if (gate.max_qubit() >= width()) {
    throw std::invalid_argument("gate operand exceeds circuit width");
  }
  gates.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
  if (other.n_main != n_main) {
    throw std::invalid_argument("appending circuits with different registers");
  }
  n_ancilla = std::max(n_ancilla, other.n_ancilla);
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

bool Circuit::has_mcrot() const {
  return std::any_of(gates.begin(), gates.end(), [](const Gate& gate) {
    return gate.kind == GateKind::MCRot;
  });
}

Circuit shift_qubits(const Circuit& circuit, uint32_t offset, uint32_t new_n_main) {
  if (new_n_main < circuit.n_main + offset) {
    throw std::invalid_argument("shifted circuit does not fit new register");
  }
  if (circuit.n_ancilla != 0) {
    throw std::invalid_argument("only ancilla-free circuits can be shifted");
  }
  Circuit shifted(new_n_main, 0);
  for (Gate gate : circuit.gates) {
    switch (gate.kind) {
      case GateKind::MCRot:
        gate.pattern.bits.insert(0, offset, 'e');
        gate.pattern.target += offset;
        break;
      case GateKind::Toffoli:
        gate.c += offset;
        [[fallthrough]];
      case GateKind::CNOT:
        gate.b += offset;
        [[fallthrough]];
      default:
        gate.a += offset;
        break;
    }
    shifted.push(std::move(gate));
  }
  return shifted;
}

}  // namespace sparseprep
