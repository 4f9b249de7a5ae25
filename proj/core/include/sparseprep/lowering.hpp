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

#pragma once

#include <vector>

#include "sparseprep/circuit.hpp"

namespace sparseprep {

/// Expands one MCRot into X/CNOT/Toffoli/RY/P primitives.
///
/// Zero-valued controls are conjugated with X pairs. With k >= 2 effective
/// controls, a compute/uncompute ladder of 2(k-1) Toffolis folds the controls
/// into k-1 ancillas starting at `ancilla_base`, and the singly-controlled
/// core runs off the last ancilla. The core takes 2 CNOTs and at most five
/// one-qubit gates (two RY when the rotation is nonzero, three P when the
/// phase is nonzero); gates with zero angle are omitted. All ancillas are
/// returned to |0>.
std::vector<Gate> lower_mcrot(const Gate& mcrot, uint32_t ancilla_base);

/// Lowers every MCRot in the circuit, pooling ladder ancillas right after
/// the existing ancilla block. Requires (and preserves) the convention that
/// pooled ancillas are |0> between top-level gate blocks.
Circuit lower_circuit(const Circuit& circuit);

/// Exact per-variant tally of a lowered circuit. Throws if an MCRot is
/// still present.
GateCounts count_gates(const Circuit& circuit);

/// The closed-form cost of a k-controlled one-qubit gate: 2(k-1) Toffolis,
/// 2 CNOTs, and 4 + 2(k - |x|) one-qubit gates, where |x| is the Hamming
/// weight of the control condition. The one-qubit term counts fused U(2)
/// blocks, so it sits one above the emitted elementary count when both the
/// rotation and the phase are active, and above it when either is zero.
/// Only defined for k >= 2; `n` is carried along from the source formula but
/// the zero-control term charges controls, not idle qubits.
GateCounts paper_cost_mcrot(uint32_t k_eff, uint32_t hamming_weight, uint32_t n);

}  // namespace sparseprep
