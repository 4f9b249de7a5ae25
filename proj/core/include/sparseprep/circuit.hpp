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

#include <cstdint>
#include <string>
#include <vector>

namespace sparseprep {

/// Per-variant tally of a lowered circuit. X, RY and P all count as
/// one-qubit gates. Also doubles as the weight triple (C_T, C_CNOT, C_1)
/// of the analytic permutation cost model.
struct GateCounts {
  uint64_t toffoli = 0;
  uint64_t cnot = 0;
  uint64_t single_qubit = 0;

  uint64_t total() const { return toffoli + cnot + single_qubit; }

  GateCounts& operator+=(const GateCounts& other) {
    toffoli += other.toffoli;
    cnot += other.cnot;
    single_qubit += other.single_qubit;
    return *this;
  }
  friend GateCounts operator+(GateCounts lhs, const GateCounts& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Control condition of a multi-controlled gate. bits[i] gives the required
/// state of qubit i: '0', '1', or 'e' for "not a control". The target qubit
/// must not coincide with any non-'e' position.
struct ControlPattern {
  std::string bits;
  uint32_t target = 0;

  /// Number of effective (non-'e') controls.
  uint32_t effective_controls() const;

  /// Qubit indices of the non-'e' positions, ascending.
  std::vector<uint32_t> control_qubits() const;

  /// Number of '1' controls (Hamming weight of the condition).
  uint32_t hamming_weight() const;

  /// True when `basis` (big-endian over `width` qubits) satisfies the
  /// pattern; 'e' positions match anything.
  bool matches(uint64_t basis, uint32_t width) const;

  friend bool operator==(const ControlPattern&, const ControlPattern&) = default;
};

enum class GateKind : uint8_t { X, CNOT, Toffoli, Ry, Phase, MCRot };

/// One gate of the circuit IR. MCRot is the only high-level variant: a
/// pattern-controlled P(phi) * Ry(theta) on the pattern's target qubit.
/// Lowered circuits contain no MCRot.
struct Gate {
  GateKind kind = GateKind::X;
  uint32_t a = 0;  // X/Ry/Phase: target. CNOT: control. Toffoli: control 1.
  uint32_t b = 0;  // CNOT: target. Toffoli: control 2.
  uint32_t c = 0;  // Toffoli: target.
  double theta = 0.0;
  double phi = 0.0;
  ControlPattern pattern;  // MCRot only.

  static Gate x(uint32_t qubit);
  static Gate cnot(uint32_t control, uint32_t target);
  static Gate toffoli(uint32_t control1, uint32_t control2, uint32_t target);
  static Gate ry(double theta, uint32_t qubit);
  static Gate phase(double phi, uint32_t qubit);
  static Gate mcrot(ControlPattern pattern, double theta, double phi);

  /// Largest qubit index this gate touches (controls included).
  uint32_t max_qubit() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over a main register of n_main qubits followed by
/// n_ancilla helper qubits. Qubit indices n_main.. address the ancilla pool;
/// every well-formed lowered circuit returns the pool to |0...0>.
struct Circuit {
  uint32_t n_main = 0;
  uint32_t n_ancilla = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  Circuit(uint32_t n_main, uint32_t n_ancilla)
      : n_main(n_main), n_ancilla(n_ancilla) {}

  uint32_t width() const { return n_main + n_ancilla; }

  /// Appends a gate, checking its operands against the circuit width.
  void push(Gate gate);

  /// Appends another circuit over the same main register; the ancilla pool
  /// grows to the larger of the two demands.
  void append(const Circuit& other);

  bool has_mcrot() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Shifts every qubit reference up by `offset` and re-homes the circuit on a
/// main register of `new_n_main` qubits. MCRot patterns gain an 'e' prefix so
/// positions keep meaning "qubit i".
Circuit shift_qubits(const Circuit& circuit, uint32_t offset, uint32_t new_n_main);

}  // namespace sparseprep
