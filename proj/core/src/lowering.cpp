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

#include "sparseprep/lowering.hpp"

#include <algorithm>
#include <stdexcept>

namespace sparseprep {

namespace {

// Singly-controlled P(phi) * Ry(theta), phase exact:
//   Ry(t/2) . CX . Ry(-t/2) P(-p/2) . CX . P(p/2)_target P(p/2)_control
// Conjugating the middle block with X flips the Ry sign and inverts the P up
// to a phase the control-side P cancels.
void emit_controlled_core(std::vector<Gate>& gates, uint32_t control,
                          uint32_t target, double theta, double phi) {
  if (theta != 0.0) gates.push_back(Gate::ry(theta / 2, target));
  gates.push_back(Gate::cnot(control, target));
  if (theta != 0.0) gates.push_back(Gate::ry(-theta / 2, target));
  if (phi != 0.0) gates.push_back(Gate::phase(-phi / 2, target));
  gates.push_back(Gate::cnot(control, target));
  if (phi != 0.0) {
    gates.push_back(Gate::phase(phi / 2, target));
    gates.push_back(Gate::phase(phi / 2, control));
  }
}

}  // namespace

std::vector<Gate> lower_mcrot(const Gate& mcrot, uint32_t ancilla_base) {
  if (mcrot.kind != GateKind::MCRot) {
    throw std::invalid_argument("lower_mcrot expects an MCRot gate");
  }
  std::vector<Gate> gates;
  if (mcrot.theta == 0.0 && mcrot.phi == 0.0) return gates;

  const ControlPattern& pattern = mcrot.pattern;
  const std::vector<uint32_t> controls = pattern.control_qubits();
  const uint32_t target = pattern.target;

  if (controls.empty()) {
    if (mcrot.theta != 0.0) gates.push_back(Gate::ry(mcrot.theta, target));
    if (mcrot.phi != 0.0) gates.push_back(Gate::phase(mcrot.phi, target));
    return gates;
  }

  std::vector<uint32_t> zero_controls;
  for (uint32_t qubit : controls) {
    if (pattern.bits[qubit] == '0') zero_controls.push_back(qubit);
  }
  for (uint32_t qubit : zero_controls) gates.push_back(Gate::x(qubit));

  if (controls.size() == 1) {
    emit_controlled_core(gates, controls[0], target, mcrot.theta, mcrot.phi);
  } else {
    const uint32_t rungs = static_cast<uint32_t>(controls.size()) - 1;
    for (uint32_t i = 0; i < rungs; ++i) {
      const uint32_t lower = (i == 0) ? controls[0] : ancilla_base + i - 1;
      gates.push_back(Gate::toffoli(lower, controls[i + 1], ancilla_base + i));
    }
    emit_controlled_core(gates, ancilla_base + rungs - 1, target, mcrot.theta,
                         mcrot.phi);
    for (uint32_t i = rungs; i-- > 0;) {
      const uint32_t lower = (i == 0) ? controls[0] : ancilla_base + i - 1;
      gates.push_back(Gate::toffoli(lower, controls[i + 1], ancilla_base + i));
    }
  }

  for (uint32_t qubit : zero_controls) gates.push_back(Gate::x(qubit));
  return gates;
}

Circuit lower_circuit(const Circuit& circuit) {
  uint32_t pool = circuit.n_ancilla;
  for (const Gate& gate : circuit.gates) {
    if (gate.kind != GateKind::MCRot) continue;
    const uint32_t k = gate.pattern.effective_controls();
    if (k >= 2) pool = std::max(pool, k - 1);
  }
  Circuit lowered(circuit.n_main, pool);
  for (const Gate& gate : circuit.gates) {
    if (gate.kind == GateKind::MCRot) {
      for (Gate& primitive : lower_mcrot(gate, circuit.n_main)) {
        lowered.push(std::move(primitive));
      }
    } else {
      lowered.push(gate);
    }
  }
  return lowered;
}

GateCounts count_gates(const Circuit& circuit) {
  GateCounts counts;
  for (const Gate& gate : circuit.gates) {
    switch (gate.kind) {
      case GateKind::X:
      case GateKind::Ry:
      case GateKind::Phase:
        ++counts.single_qubit;
        break;
      case GateKind::CNOT:
        ++counts.cnot;
        break;
      case GateKind::Toffoli:
        ++counts.toffoli;
        break;
      case GateKind::MCRot:
        throw std::invalid_argument("cannot count an unlowered circuit");
    }
  }
  return counts;
}

GateCounts paper_cost_mcrot(uint32_t k_eff, uint32_t hamming_weight,
                            uint32_t n) {
  (void)n;  // the zero-control term reads k, not n; see the header note
  if (k_eff < 2) {
    throw std::invalid_argument("paper_cost_mcrot is defined for k >= 2");
  }
  if (hamming_weight > k_eff) {
    throw std::invalid_argument("Hamming weight exceeds control count");
  }
  return GateCounts{2 * (uint64_t{k_eff} - 1), 2,
                    4 + 2 * (uint64_t{k_eff} - hamming_weight)};
}

}  // namespace sparseprep
