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

#include "sparseprep/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sparseprep/io.hpp"

namespace sparseprep {

namespace {

using Complex = std::complex<double>;
using Entry = std::pair<uint64_t, Complex>;

constexpr double kUnitarityTolerance = 1e-12;
constexpr double kAncillaTolerance = 1e-10;

uint64_t qubit_mask(uint32_t qubit, uint32_t width) {
  return uint64_t{1} << (width - 1 - qubit);
}

// Tracked-support engine: the state is a sorted list of nonzero amplitudes.
// Preparation circuits keep the support at O(d * n), so each gate costs
// O(support log support) instead of O(2^width).
class TrackedState {
 public:
  TrackedState(uint32_t width, uint64_t initial_basis) : width_(width) {
    entries_.emplace_back(initial_basis, Complex{1.0, 0.0});
    norm_squared_ = 1.0;
  }

  void apply(const Gate& gate) {
    switch (gate.kind) {
      case GateKind::X:
        remap([m = qubit_mask(gate.a, width_)](uint64_t idx) { return idx ^ m; });
        break;
      case GateKind::CNOT:
        remap([mc = qubit_mask(gate.a, width_),
               mt = qubit_mask(gate.b, width_)](uint64_t idx) {
          return (idx & mc) ? idx ^ mt : idx;
        });
        break;
      case GateKind::Toffoli:
        remap([m1 = qubit_mask(gate.a, width_), m2 = qubit_mask(gate.b, width_),
               mt = qubit_mask(gate.c, width_)](uint64_t idx) {
          return ((idx & m1) && (idx & m2)) ? idx ^ mt : idx;
        });
        break;
      case GateKind::Ry:
        rotate(qubit_mask(gate.a, width_), std::cos(gate.theta / 2),
               std::sin(gate.theta / 2), Complex{1.0, 0.0},
               [](uint64_t) { return true; });
        break;
      case GateKind::Phase: {
        const Complex factor = std::polar(1.0, gate.phi);
        const uint64_t m = qubit_mask(gate.a, width_);
        for (Entry& entry : entries_) {
          if (entry.first & m) entry.second *= factor;
        }
        break;
      }
      case GateKind::MCRot: {
        const Complex factor = std::polar(1.0, gate.phi);
        rotate(qubit_mask(gate.pattern.target, width_),
               std::cos(gate.theta / 2), std::sin(gate.theta / 2), factor,
               [&gate, this](uint64_t idx) {
                 return gate.pattern.matches(idx, width_);
               });
        break;
      }
    }
    check_unitarity();
  }

  SparseState take(uint32_t width) && {
    return SparseState{width, std::move(entries_)};
  }

 private:
  template <typename Map>
  void remap(Map&& map) {
    for (Entry& entry : entries_) entry.first = map(entry.first);
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
  }

  // Applies [[c, -s], [f*s, f*c]] on the target bit of every entry matching
  // the condition; f carries the phase-gate factor of an MCRot.
  template <typename Cond>
  void rotate(uint64_t m, double c, double s, Complex f, Cond&& matches) {
    std::vector<Entry> contributions;
    contributions.reserve(entries_.size() * 2);
    for (const Entry& entry : entries_) {
      const auto [idx, amp] = entry;
      if (!matches(idx)) {
        contributions.emplace_back(idx, amp);
        continue;
      }
      if (idx & m) {
        contributions.emplace_back(idx ^ m, -s * amp);
        contributions.emplace_back(idx, f * (c * amp));
      } else {
        contributions.emplace_back(idx, c * amp);
        contributions.emplace_back(idx ^ m, f * (s * amp));
      }
    }
    std::stable_sort(
        contributions.begin(), contributions.end(),
        [](const Entry& a, const Entry& b) { return a.first < b.first; });
    entries_.clear();
    for (const Entry& contribution : contributions) {
      if (!entries_.empty() && entries_.back().first == contribution.first) {
        entries_.back().second += contribution.second;
      } else {
        entries_.push_back(contribution);
      }
    }
    std::erase_if(entries_, [](const Entry& entry) {
      return entry.second == Complex{0.0, 0.0};
    });
  }

  void check_unitarity() {
    double sum = 0.0;
    for (const Entry& entry : entries_) sum += std::norm(entry.second);
    if (std::abs(std::sqrt(sum) - std::sqrt(norm_squared_)) >
        kUnitarityTolerance) {
      throw std::runtime_error("gate application broke unitarity");
    }
    norm_squared_ = sum;
  }

  uint32_t width_;
  std::vector<Entry> entries_;
  double norm_squared_ = 1.0;
};

void check_circuit(const Circuit& circuit, uint64_t initial_basis) {
  if (circuit.width() == 0) {
    throw std::invalid_argument("cannot simulate a zero-qubit circuit");
  }
  if (circuit.width() > kMaxSimQubits) {
    throw std::invalid_argument("circuit width " +
                                std::to_string(circuit.width()) +
                                " exceeds the simulator cap of " +
                                std::to_string(kMaxSimQubits));
  }
  if (initial_basis >> circuit.width() != 0) {
    throw std::invalid_argument("initial basis state out of range");
  }
  for (const Gate& gate : circuit.gates) {
    if (gate.max_qubit() >= circuit.width()) {
      throw std::invalid_argument("gate operand out of range");
    }
  }
}

template <typename State>
double fidelity_impl(const State& state, uint32_t state_width,
                     const SparseVector& target, double total_mass,
                     double ancilla_mass) {
  if (ancilla_mass > kAncillaTolerance) {
    throw std::runtime_error("ancillas not restored to |0>");
  }
  const uint32_t n_ancilla = state_width - target.num_qubits();
  const SparseVector unit = target.normalized();
  Complex overlap{0.0, 0.0};
  double support_mass = 0.0;
  for (const SparseEntry& entry : unit.entries()) {
    const Complex amp = state(entry.location << n_ancilla);
    overlap += std::conj(entry.amplitude) * amp;
    support_mass += std::norm(amp);
  }
  const double result = std::abs(overlap);
  const double off_support = total_mass - ancilla_mass - support_mass;
  if (off_support > 1.0 - result * result + kAncillaTolerance) {
    throw std::runtime_error("probability mass outside the target support");
  }
  return std::min(result, 1.0);
}

}  // namespace

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& amp : amplitudes) sum += std::norm(amp);
  return std::sqrt(sum);
}

double SparseState::norm() const {
  double sum = 0.0;
  for (const auto& [idx, amp] : entries) sum += std::norm(amp);
  return std::sqrt(sum);
}

std::complex<double> SparseState::amplitude(uint64_t basis) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), basis,
      [](const Entry& entry, uint64_t key) { return entry.first < key; });
  if (it == entries.end() || it->first != basis) return {0.0, 0.0};
  return it->second;
}

StateVector SparseState::densified() const {
  StateVector state;
  state.n_qubits = n_qubits;
  state.amplitudes.assign(uint64_t{1} << n_qubits, Complex{0.0, 0.0});
  for (const auto& [idx, amp] : entries) state.amplitudes[idx] = amp;
  return state;
}

SparseState simulate_support(const Circuit& circuit, uint64_t initial_basis) {
  check_circuit(circuit, initial_basis);
  TrackedState state(circuit.width(), initial_basis);
  for (const Gate& gate : circuit.gates) state.apply(gate);
  return std::move(state).take(circuit.width());
}

StateVector simulate(const Circuit& circuit) {
  return simulate_support(circuit).densified();
}

StateVector simulate_reference(const Circuit& circuit, uint64_t initial_basis) {
  check_circuit(circuit, initial_basis);
  const uint32_t width = circuit.width();
  const uint64_t dim = uint64_t{1} << width;
  StateVector state;
  state.n_qubits = width;
  state.amplitudes.assign(dim, Complex{0.0, 0.0});
  state.amplitudes[initial_basis] = 1.0;
  auto& amps = state.amplitudes;
  for (const Gate& gate : circuit.gates) {
    switch (gate.kind) {
      case GateKind::X: {
        const uint64_t m = qubit_mask(gate.a, width);
        for (uint64_t i = 0; i < dim; ++i) {
          if (!(i & m)) std::swap(amps[i], amps[i ^ m]);
        }
        break;
      }
      case GateKind::CNOT: {
        const uint64_t mc = qubit_mask(gate.a, width);
        const uint64_t mt = qubit_mask(gate.b, width);
        for (uint64_t i = 0; i < dim; ++i) {
          if ((i & mc) && !(i & mt)) std::swap(amps[i], amps[i ^ mt]);
        }
        break;
      }
      case GateKind::Toffoli: {
        const uint64_t m1 = qubit_mask(gate.a, width);
        const uint64_t m2 = qubit_mask(gate.b, width);
        const uint64_t mt = qubit_mask(gate.c, width);
        for (uint64_t i = 0; i < dim; ++i) {
          if ((i & m1) && (i & m2) && !(i & mt)) std::swap(amps[i], amps[i ^ mt]);
        }
        break;
      }
      case GateKind::Ry: {
        const uint64_t m = qubit_mask(gate.a, width);
        const double c = std::cos(gate.theta / 2);
        const double s = std::sin(gate.theta / 2);
        for (uint64_t i = 0; i < dim; ++i) {
          if (i & m) continue;
          const Complex lo = amps[i];
          const Complex hi = amps[i ^ m];
          amps[i] = c * lo - s * hi;
          amps[i ^ m] = s * lo + c * hi;
        }
        break;
      }
      case GateKind::Phase: {
        const uint64_t m = qubit_mask(gate.a, width);
        const Complex factor = std::polar(1.0, gate.phi);
        for (uint64_t i = 0; i < dim; ++i) {
          if (i & m) amps[i] *= factor;
        }
        break;
      }
      case GateKind::MCRot: {
        const uint64_t m = qubit_mask(gate.pattern.target, width);
        const double c = std::cos(gate.theta / 2);
        const double s = std::sin(gate.theta / 2);
        const Complex factor = std::polar(1.0, gate.phi);
        for (uint64_t i = 0; i < dim; ++i) {
          if ((i & m) || !gate.pattern.matches(i, width)) continue;
          const Complex lo = amps[i];
          const Complex hi = amps[i ^ m];
          amps[i] = c * lo - s * hi;
          amps[i ^ m] = factor * (s * lo + c * hi);
        }
        break;
      }
    }
  }
  return state;
}

double fidelity(const StateVector& state, const SparseVector& target) {
  if (state.n_qubits < target.num_qubits()) {
    throw std::invalid_argument("state narrower than the target register");
  }
  const uint32_t n_ancilla = state.n_qubits - target.num_qubits();
  const uint64_t ancilla_mask = (uint64_t{1} << n_ancilla) - 1;
  double total = 0.0;
  double ancilla_mass = 0.0;
  for (uint64_t i = 0; i < state.amplitudes.size(); ++i) {
    const double mass = std::norm(state.amplitudes[i]);
    total += mass;
    if (i & ancilla_mask) ancilla_mass += mass;
  }
  return fidelity_impl(
      [&state](uint64_t idx) { return state.amplitudes[idx]; }, state.n_qubits,
      target, total, ancilla_mass);
}

double fidelity(const SparseState& state, const SparseVector& target) {
  if (state.n_qubits < target.num_qubits()) {
    throw std::invalid_argument("state narrower than the target register");
  }
  const uint32_t n_ancilla = state.n_qubits - target.num_qubits();
  const uint64_t ancilla_mask = (uint64_t{1} << n_ancilla) - 1;
  double total = 0.0;
  double ancilla_mass = 0.0;
  for (const auto& [idx, amp] : state.entries) {
    const double mass = std::norm(amp);
    total += mass;
    if (idx & ancilla_mask) ancilla_mass += mass;
  }
  return fidelity_impl(
      [&state](uint64_t idx) { return state.amplitude(idx); }, state.n_qubits,
      target, total, ancilla_mass);
}

std::string dump_state(const StateVector& state) {
  std::string out;
  for (uint64_t i = 0; i < state.amplitudes.size(); ++i) {
    if (std::abs(state.amplitudes[i]) > 1e-12) {
      out += std::to_string(i) + " " + format_double(state.amplitudes[i].real()) +
             " " + format_double(state.amplitudes[i].imag()) + "\n";
    }
  }
  return out;
}

}  // namespace sparseprep
