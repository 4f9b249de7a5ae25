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

#include "sparseprep/angle_table.hpp"
#include "sparseprep/circuit.hpp"
#include "sparseprep/sparse_vector.hpp"

namespace sparseprep {

/// Permutation Grover-Rudolph: prepare the d nonzero amplitudes packed into
/// the first d basis states of ceil(log2 d) qubits (plain Grover-Rudolph on
/// the least significant qubits), extend the register to n qubits, then send
/// each amplitude to its location with one cycle circuit per cycle of the
/// sparse permutation. The cycle flag ancilla is shared across cycles. With
/// d = 1 the dense stage degenerates to nothing and the amplitude's phase, a
/// global one, is dropped.
///
/// `optimize_stage` runs the merge optimizer over the dense-stage table.
Circuit perm_gr_circuit(const SparseVector& vector, bool optimize_stage = false);

/// The dense-stage angle table the pipeline above uses (empty for d = 1).
AngleTable perm_gr_stage_table(const SparseVector& vector,
                               bool optimize_stage = false);

}  // namespace sparseprep
