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

#include "sparseprep/permutation.hpp"

#include <bit>
#include <stdexcept>

namespace sparseprep {

namespace {

void check_locations(std::span<const uint64_t> locations, uint32_t n) {
  if (n == 0 || n > 63) {
    throw std::invalid_argument("qubit count must be in [1, 63]");
  }
  const uint64_t dim = uint64_t{1} << n;
  for (size_t i = 0; i < locations.size(); ++i) {
    if (locations[i] >= dim) {
      throw std::invalid_argument("location out of range");
    }
    if (i > 0 && locations[i] <= locations[i - 1]) {
      throw std::invalid_argument("locations must be strictly increasing");
    }
  }
}

// Conditioned flag flip: X-conjugate the zero bits of `value`, AND the n
// register qubits into the top of a Toffoli ladder, copy onto the flag, and
// uncompute. Ladder ancillas live at flag+1... The single-control case is a
// plain CNOT.
void emit_conditioned_flip(Circuit& circuit, uint64_t value, uint32_t n,
                           uint32_t flag) {
  std::vector<uint32_t> zero_bits;
  for (uint32_t q = 0; q < n; ++q) {
    if (((value >> (n - 1 - q)) & 1) == 0) zero_bits.push_back(q);
  }
  for (uint32_t q : zero_bits) circuit.push(Gate::x(q));
  if (n == 1) {
    circuit.push(Gate::cnot(0, flag));
  } else {
    const uint32_t ladder = flag + 1;
    for (uint32_t i = 0; i + 1 < n; ++i) {
      const uint32_t lower = (i == 0) ? 0 : ladder + i - 1;
      circuit.push(Gate::toffoli(lower, i + 1, ladder + i));
    }
    circuit.push(Gate::cnot(ladder + n - 2, flag));
    for (uint32_t i = n - 1; i-- > 0;) {
      const uint32_t lower = (i == 0) ? 0 : ladder + i - 1;
      circuit.push(Gate::toffoli(lower, i + 1, ladder + i));
    }
  }
  for (uint32_t q : zero_bits) circuit.push(Gate::x(q));
}

}  // namespace

CyclePermutation sparse_perm(std::span<const uint64_t> locations, uint32_t n) {
  check_locations(locations, n);
  const uint64_t d = locations.size();
  std::vector<char> available(d, 1);
  CyclePermutation permutation;
  for (uint64_t i = 0; i < d; ++i) {
    if (!available[i] || locations[i] == i) continue;
    std::vector<uint64_t> cycle{i, locations[i]};
    uint64_t j = locations[i];
    while (j < d) {
      available[j] = 0;
      j = locations[j];
      cycle.push_back(j);
    }
    permutation.cycles.push_back(std::move(cycle));
  }
  return permutation;
}

uint64_t apply_permutation(const CyclePermutation& permutation, uint64_t index) {
  for (const auto& cycle : permutation.cycles) {
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (cycle[k] == index) return cycle[(k + 1) % cycle.size()];
    }
  }
  return index;
}

Circuit cycle_circuit(std::span<const uint64_t> cycle, uint32_t n) {
  check_locations({}, n);
  if (cycle.size() < 2) {
    throw std::invalid_argument("a cycle needs at least two elements");
  }
  const uint64_t dim = uint64_t{1} << n;
  for (size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] >= dim) throw std::invalid_argument("cycle element out of range");
    for (size_t j = i + 1; j < cycle.size(); ++j) {
      if (cycle[i] == cycle[j]) {
        throw std::invalid_argument("cycle elements must be distinct");
      }
    }
  }
  const uint32_t flag = n;
  const uint32_t n_ancilla = 1 + (n >= 2 ? n - 1 : 0);
  Circuit circuit(n, n_ancilla);
  const size_t length = cycle.size();
  for (size_t k = 0; k < length; ++k) {
    emit_conditioned_flip(circuit, cycle[k], n, flag);
    const uint64_t delta = cycle[k] ^ cycle[(k + 1) % length];
    for (uint32_t q = 0; q < n; ++q) {
      if ((delta >> (n - 1 - q)) & 1) circuit.push(Gate::cnot(flag, q));
    }
  }
  emit_conditioned_flip(circuit, cycle[0], n, flag);
  return circuit;
}

uint64_t cycle_cost(std::span<const uint64_t> cycle, uint32_t n,
                    const GateCounts& weights) {
  if (cycle.size() < 2) {
    throw std::invalid_argument("a cycle needs at least two elements");
  }
  const uint64_t m = cycle.size();
  uint64_t cost = 2 * (m + 1) *
                  ((n - 1) * weights.toffoli + 2 * weights.single_qubit +
                   weights.cnot);
  for (uint64_t k = 0; k <= m; ++k) {
    const uint64_t element = cycle[k % m];
    cost += 2 * (n - std::popcount(element)) * weights.single_qubit;
  }
  for (uint64_t k = 0; k < m; ++k) {
    const uint64_t delta = cycle[k] ^ cycle[(k + 1) % m];
    const uint64_t flips = std::popcount(delta);
    cost += 4 * flips * weights.single_qubit + 2 * flips * weights.cnot;
  }
  return cost;
}

std::string dump_cycles(const CyclePermutation& permutation) {
  std::string out;
  for (const auto& cycle : permutation.cycles) {
    out += "(";
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out += " ";
      out += std::to_string(cycle[k]);
    }
    out += ")\n";
  }
  return out;
}

}  // namespace sparseprep
