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

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sparseprep/circuit.hpp"
#include "sparseprep/sparse_vector.hpp"

namespace sparseprep {

/// Hard width cap for simulation (memory guard on the dense view).
inline constexpr uint32_t kMaxSimQubits = 24;

/// Dense statevector over main + ancilla qubits, big-endian like the rest of
/// the library: qubit 0 is the most significant index bit, ancillas sit in
/// the least significant bits.
struct StateVector {
  uint32_t n_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  double norm() const;
};

/// Nonzero amplitudes of a simulated state, sorted by basis index. The
/// states produced by sparse-preparation circuits keep tiny support, so this
/// is the working representation of the simulation engine; `simulate`
/// densifies it into a StateVector.
struct SparseState {
  uint32_t n_qubits = 0;
  std::vector<std::pair<uint64_t, std::complex<double>>> entries;

  double norm() const;
  std::complex<double> amplitude(uint64_t basis) const;
  StateVector densified() const;
};

/// Applies the circuit to |0...0> gate by gate, exactly. Handles both the
/// lowered primitives and high-level MCRot gates (wildcard controls
/// honored). Throws if the width exceeds kMaxSimQubits, if an operand is out
/// of range, or if a gate fails the per-gate unitarity check (norm drift
/// beyond 1e-12).
StateVector simulate(const Circuit& circuit);

/// Same engine, but starting from the given basis state and returning the
/// tracked support directly. This is what pipeline verification and the
/// brute-force equivalence tests run on.
SparseState simulate_support(const Circuit& circuit, uint64_t initial_basis = 0);

/// Straight-line dense reference: in-place stride arithmetic over all 2^n
/// amplitudes. Slow; kept as an independent cross-check of the tracked
/// engine.
StateVector simulate_reference(const Circuit& circuit, uint64_t initial_basis = 0);

/// Modulus of the overlap between the simulated state and the (normalized)
/// target on the main register; global-phase invariant. The ancilla portion
/// of the state must carry no more than 1e-10 probability mass outside
/// |0...0>, otherwise this throws (a lowering bug), and the mass outside the
/// target support must be consistent with the returned fidelity.
double fidelity(const StateVector& state, const SparseVector& target);
double fidelity(const SparseState& state, const SparseVector& target);

/// "<index> <re> <im>" lines for amplitudes with modulus > 1e-12.
std::string dump_state(const StateVector& state);

}  // namespace sparseprep
