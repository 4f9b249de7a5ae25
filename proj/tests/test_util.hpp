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

#include <cmath>
#include <complex>
#include <random>

#include "sparseprep/circuit.hpp"
#include "sparseprep/simulator.hpp"
#include "sparseprep/sparse_vector.hpp"

namespace sparseprep::test {

/// The three-qubit reference vector used throughout: amplitudes sqrt(1/3)
/// and sqrt(2/3) at locations 1 and 6.
inline SparseVector reference_vector() {
  return SparseVector(
      3, {SparseEntry{1, {std::sqrt(1.0 / 3.0), 0.0}},
          SparseEntry{6, {std::sqrt(2.0 / 3.0), 0.0}}});
}

inline bool complex_close(std::complex<double> a, std::complex<double> b,
                          double eps = 1e-12) {
  return std::abs(a - b) <= eps;
}

/// |<a|b>| over the main register, requiring the ancilla tails of both
/// states to be |0> (mass below 1e-10 elsewhere).
inline double overlap_on_main(const SparseState& a, const SparseState& b,
                              uint32_t n_main) {
  const auto main_amps = [n_main](const SparseState& state) {
    const uint32_t n_anc = state.n_qubits - n_main;
    const uint64_t anc_mask = (uint64_t{1} << n_anc) - 1;
    std::vector<std::pair<uint64_t, std::complex<double>>> amps;
    double stray = 0.0;
    for (const auto& [idx, amp] : state.entries) {
      if (idx & anc_mask) {
        stray += std::norm(amp);
      } else {
        amps.emplace_back(idx >> n_anc, amp);
      }
    }
    if (stray > 1e-10) throw std::runtime_error("ancilla tail not restored");
    return amps;
  };
  const auto amps_a = main_amps(a);
  const auto amps_b = main_amps(b);
  std::complex<double> overlap{0.0, 0.0};
  size_t ib = 0;
  for (const auto& [idx, amp] : amps_a) {
    while (ib < amps_b.size() && amps_b[ib].first < idx) ++ib;
    if (ib < amps_b.size() && amps_b[ib].first == idx) {
      overlap += std::conj(amp) * amps_b[ib].second;
    }
  }
  return std::abs(overlap);
}

/// Random circuit soup over every gate kind, for engine cross-checks.
inline Circuit random_circuit(uint32_t width, uint32_t num_gates,
                              std::mt19937_64& rng) {
  Circuit circuit(width, 0);
  const auto qubit = [&] { return static_cast<uint32_t>(rng() % width); };
  const auto angle = [&] {
    return static_cast<double>(rng() % 6283) / 1000.0 - 3.141;
  };
  for (uint32_t i = 0; i < num_gates; ++i) {
    switch (rng() % 6) {
      case 0:
        circuit.push(Gate::x(qubit()));
        break;
      case 1: {
        uint32_t c = qubit(), t = qubit();
        while (t == c) t = qubit();
        circuit.push(Gate::cnot(c, t));
        break;
      }
      case 2: {
        if (width < 3) {
          circuit.push(Gate::x(qubit()));
          break;
        }
        uint32_t c1 = qubit(), c2 = qubit(), t = qubit();
        while (c2 == c1) c2 = qubit();
        while (t == c1 || t == c2) t = qubit();
        circuit.push(Gate::toffoli(c1, c2, t));
        break;
      }
      case 3:
        circuit.push(Gate::ry(angle(), qubit()));
        break;
      case 4:
        circuit.push(Gate::phase(angle(), qubit()));
        break;
      case 5: {
        const uint32_t len = static_cast<uint32_t>(rng() % width);
        ControlPattern pattern;
        const char symbols[3] = {'0', '1', 'e'};
        for (uint32_t p = 0; p < len; ++p) pattern.bits += symbols[rng() % 3];
        pattern.target =
            len + static_cast<uint32_t>(rng() % (width - len));
        circuit.push(Gate::mcrot(std::move(pattern), angle(), angle()));
        break;
      }
    }
  }
  return circuit;
}

}  // namespace sparseprep::test
