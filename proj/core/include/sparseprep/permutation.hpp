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

#include <span>
#include <string>
#include <vector>

#include "sparseprep/circuit.hpp"

namespace sparseprep {

/// A permutation of basis-state indices decomposed into disjoint cycles.
/// Each cycle (x0 x1 ... x_{M-1}) maps x_k -> x_{k+1} cyclically; cycles of
/// length one are never stored.
struct CyclePermutation {
  std::vector<std::vector<uint64_t>> cycles;

  uint64_t total_length() const {
    uint64_t sum = 0;
    for (const auto& cycle : cycles) sum += cycle.size();
    return sum;
  }
};

/// Builds a permutation sending i -> locations[i] for every i < d, directly
/// in cycle form, in O(d*n) work. Walking from a start index i, the cycle
/// collects locations until one lands at or beyond d, which closes it; fixed
/// points contribute nothing. The total cycle length never exceeds 2d.
/// `locations` must be strictly increasing and < 2^n.
CyclePermutation sparse_perm(std::span<const uint64_t> locations, uint32_t n);

/// Image of `index` under the permutation.
uint64_t apply_permutation(const CyclePermutation& permutation, uint64_t index);

/// Circuit realizing one cycle on an n-qubit register with one flag ancilla:
/// for each cycle element, a flip of the flag conditioned on the register
/// equaling x_k followed by flag-controlled X gates on the bits of
/// x_k xor x_{k+1}, and a closing flip conditioned on x_0. The conditioned
/// flips are emitted lowered (X conjugation, Toffoli ladder, CNOT onto the
/// flag), so the result is primitive-only; ancillas end in |0>.
Circuit cycle_circuit(std::span<const uint64_t> cycle, uint32_t n);

/// Closed-form cost of cycle_circuit under the given per-gate weights:
///   2(M+1)((n-1)*C_T + 2*C_1 + C_CNOT) + 2*sum_{k=0..M}(n-|x_k|)*C_1
///   + 4*sum_{k=0..M-1}|x_k^x_{k+1}|*C_1 + 2*sum_{k=0..M-1}|x_k^x_{k+1}|*C_CNOT
/// with x_M = x_0. This is the analytic model (O(M*n)); the emitted gate
/// list prices the flag-controlled bit flips as plain CNOTs and is cheaper.
uint64_t cycle_cost(std::span<const uint64_t> cycle, uint32_t n,
                    const GateCounts& weights);

/// One cycle per line: "(x0 x1 ... )".
std::string dump_cycles(const CyclePermutation& permutation);

}  // namespace sparseprep
