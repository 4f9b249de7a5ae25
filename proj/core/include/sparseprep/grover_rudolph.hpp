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

// Grover-Rudolph synthesis.
//
// The state is built level by level: the level-k coarse graining merges
// amplitude pairs of the (k+1)-qubit vector into one k-qubit parent whose
// magnitude squared is the summed probability of its children and whose
// phase is the 0-child's phase (arg of a vanished 0-child counts as 0).
// Rotating qubit k by theta = 2*arccos(|child0| / |parent|) with a phase
// shift of phi = arg(child1) - arg(child0), controlled on qubits 0..k-1
// holding the parent pattern, then walks the ladder back down. Entries whose
// rotation and phase are both zero do nothing and are never stored, which is
// what keeps the tables at most d entries wide per level.

/// Level-k coarse graining of the target: a sparse vector on k qubits.
struct CoarseLevel {
  uint32_t k = 0;
  SparseVector vector;
};

/// One coarse-graining step, level k+1 -> level k. Parents whose two
/// children both vanish are absent from the result.
CoarseLevel coarse_grain(const CoarseLevel& level);

/// Angle table via dense enumeration of every level (the reference route;
/// classical work O(2^n)). The table is scale invariant, so the input does
/// not have to be normalized.
AngleTable find_angles(const SparseVector& vector);

/// Angle table via the sparse pair-walk over the nonzero entries only;
/// classical work O(d*n). Produces exactly the same table as find_angles.
AngleTable find_sparse_angles(const SparseVector& vector);

/// Assembles the high-level circuit: one MCRot per table entry, targeting
/// qubit k for level k, ordered by level then by ascending pattern. Throws
/// if the table is deeper than n levels.
Circuit build_circuit(const AngleTable& table, uint32_t num_qubits);

}  // namespace sparseprep
