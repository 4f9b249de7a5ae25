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

#include "sparseprep/perm_gr.hpp"

#include <bit>

#include "sparseprep/grover_rudolph.hpp"
#include "sparseprep/optimizer.hpp"
#include "sparseprep/permutation.hpp"

namespace sparseprep {

namespace {

uint32_t ceil_log2(uint64_t value) {
  return value <= 1 ? 0 : 64 - std::countl_zero(value - 1);
}

// Nonzero amplitudes repacked onto the first d basis states of stage_qubits
// qubits (zero-padded when d is not a power of two).
SparseVector packed_stage_vector(const SparseVector& vector,
                                 uint32_t stage_qubits) {
  std::vector<SparseEntry> packed;
  packed.reserve(vector.sparsity());
  uint64_t slot = 0;
  for (const SparseEntry& entry : vector.entries()) {
    packed.push_back(SparseEntry{slot++, entry.amplitude});
  }
  return SparseVector(stage_qubits, std::move(packed));
}

}  // namespace

AngleTable perm_gr_stage_table(const SparseVector& vector, bool optimize_stage) {
  const uint64_t d = vector.sparsity();
  const uint32_t stage_qubits = ceil_log2(d);
  if (stage_qubits == 0) return AngleTable{};
  AngleTable table =
      find_sparse_angles(packed_stage_vector(vector.normalized(), stage_qubits));
  if (optimize_stage) table = optimize_table(table);
  return table;
}

Circuit perm_gr_circuit(const SparseVector& vector, bool optimize_stage) {
  const uint32_t n = vector.num_qubits();
  const uint64_t d = vector.sparsity();
  const uint32_t stage_qubits = ceil_log2(d);

  Circuit circuit(n, 0);
  if (stage_qubits > 0) {
    const Circuit stage =
        build_circuit(perm_gr_stage_table(vector, optimize_stage), stage_qubits);
    // The packed amplitudes live at indices < d, i.e. on the least
    // significant qubits once the register is n wide.
    circuit = shift_qubits(stage, n - stage_qubits, n);
  }

  std::vector<uint64_t> locations;
  locations.reserve(d);
  for (const SparseEntry& entry : vector.entries()) {
    locations.push_back(entry.location);
  }
  const CyclePermutation permutation = sparse_perm(locations, n);
  for (const auto& cycle : permutation.cycles) {
    circuit.append(cycle_circuit(cycle, n));
  }
  return circuit;
}

}  // namespace sparseprep
