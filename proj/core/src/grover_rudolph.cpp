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

#include "sparseprep/grover_rudolph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sparseprep {

namespace {

using Complex = std::complex<double>;

constexpr Complex kZero{0.0, 0.0};

double safe_arg(Complex value) { return value == kZero ? 0.0 : std::arg(value); }

// Parent amplitude of a child pair: phase of the 0-child, magnitude from the
// summed probabilities. Both angle routes funnel through this kernel so
// their tables agree to the bit.
Complex coarse_parent(Complex child0, Complex child1) {
  const double magnitude = std::sqrt(std::norm(child0) + std::norm(child1));
  return std::polar(magnitude, safe_arg(child0));
}

AnglePair pair_angles(Complex child0, Complex child1, double parent_magnitude) {
  AnglePair angles;
  if (child1 == kZero) {
    angles.theta = 0.0;
  } else if (child0 == kZero) {
    angles.theta = 2.0 * std::acos(0.0);
  } else {
    const double ratio =
        std::clamp(std::abs(child0) / parent_magnitude, 0.0, 1.0);
    angles.theta = 2.0 * std::acos(ratio);
  }
  angles.phi = safe_arg(child1) - safe_arg(child0);
  return angles;
}

std::string pattern_bits(uint64_t value, uint32_t length) {
  std::string bits(length, '0');
  for (uint32_t i = 0; i < length; ++i) {
    if ((value >> (length - 1 - i)) & 1) bits[i] = '1';
  }
  return bits;
}

void store_if_nontrivial(AngleLevel& level, uint64_t parent, uint32_t k,
                         const AnglePair& angles) {
  if (angles.theta == 0.0 && angles.phi == 0.0) return;
  level.emplace(pattern_bits(parent, k), angles);
}

// One sparse coarse-graining sweep: children at level k+1 (sorted) to
// parents at level k, collecting the level-k angles on the way. Consecutive
// entries at locations 2p and 2p+1 merge; everything else is a single-child
// parent.
std::vector<SparseEntry> coarse_sweep(const std::vector<SparseEntry>& children,
                                      uint32_t k, AngleLevel* level) {
  std::vector<SparseEntry> parents;
  parents.reserve(children.size());
  for (size_t l = 0; l < children.size(); ++l) {
    const uint64_t location = children[l].location;
    Complex child0 = kZero;
    Complex child1 = kZero;
    if (location % 2 == 0 && l + 1 < children.size() &&
        children[l + 1].location == location + 1) {
      child0 = children[l].amplitude;
      child1 = children[l + 1].amplitude;
      ++l;  // the pair is consumed together
    } else if (location % 2 == 0) {
      child0 = children[l].amplitude;
    } else {
      child1 = children[l].amplitude;
    }
    const uint64_t parent = location / 2;
    const Complex amplitude = coarse_parent(child0, child1);
    parents.push_back(SparseEntry{parent, amplitude});
    if (level != nullptr) {
      store_if_nontrivial(*level, parent, k,
                          pair_angles(child0, child1, std::abs(amplitude)));
    }
  }
  return parents;
}

}  // namespace

CoarseLevel coarse_grain(const CoarseLevel& level) {
  if (level.k == 0 || level.vector.num_qubits() != level.k) {
    throw std::invalid_argument("coarse_grain needs a level k >= 1");
  }
  std::vector<SparseEntry> parents =
      coarse_sweep(level.vector.entries(), level.k - 1, nullptr);
  return CoarseLevel{level.k - 1,
                     SparseVector(level.k - 1, std::move(parents))};
}

AngleTable find_sparse_angles(const SparseVector& vector) {
  const uint32_t n = vector.num_qubits();
  AngleTable table;
  table.levels.assign(n, AngleLevel{});
  std::vector<SparseEntry> current = vector.entries();
  for (uint32_t k = n; k-- > 0;) {
    current = coarse_sweep(current, k, &table.levels[k]);
  }
  return table;
}

AngleTable find_angles(const SparseVector& vector) {
  const uint32_t n = vector.num_qubits();
  AngleTable table;
  table.levels.assign(n, AngleLevel{});
  std::vector<Complex> current = vector.densified();
  for (uint32_t k = n; k-- > 0;) {
    std::vector<Complex> parents(uint64_t{1} << k, kZero);
    for (uint64_t p = 0; p < parents.size(); ++p) {
      const Complex child0 = current[2 * p];
      const Complex child1 = current[2 * p + 1];
      if (child0 == kZero && child1 == kZero) continue;
      parents[p] = coarse_parent(child0, child1);
      store_if_nontrivial(table.levels[k], p, k,
                          pair_angles(child0, child1, std::abs(parents[p])));
    }
    current = std::move(parents);
  }
  return table;
}

Circuit build_circuit(const AngleTable& table, uint32_t num_qubits) {
  if (table.depth() > num_qubits) {
    throw std::invalid_argument("angle table deeper than the qubit count");
  }
  Circuit circuit(num_qubits, 0);
  for (uint32_t k = 0; k < table.depth(); ++k) {
    for (const auto& [bits, angles] : table.levels[k]) {
      if (bits.size() != k) {
        throw std::invalid_argument("level-" + std::to_string(k) +
                                    " pattern of wrong length: '" + bits + "'");
      }
      circuit.push(Gate::mcrot(ControlPattern{bits, k}, angles.theta,
                               angles.phi));
    }
  }
  return circuit;
}

}  // namespace sparseprep
