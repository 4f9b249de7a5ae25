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

#include <numbers>
#include <random>

#include "doctest.h"
#include "sparseprep/io.hpp"
#include "sparseprep/simulator.hpp"
#include "test_util.hpp"

using namespace sparseprep;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("empty circuit prepares |0...0>") {
  const StateVector state = simulate(Circuit(2, 0));
  REQUIRE(state.amplitudes.size() == 4);
  CHECK(state.amplitudes[0] == std::complex<double>{1.0, 0.0});
  CHECK(state.norm() == doctest::Approx(1.0));
}

TEST_CASE("primitive gates act on the expected big-endian bits") {
  Circuit circuit(3, 0);
  circuit.push(Gate::x(0));  // |100>
  circuit.push(Gate::cnot(0, 2));  // |101>
  circuit.push(Gate::toffoli(0, 2, 1));  // |111>
  const StateVector state = simulate(circuit);
  CHECK(state.amplitudes[0b111] == std::complex<double>{1.0, 0.0});
}

TEST_CASE("Ry and Phase match their matrix definitions") {
  Circuit circuit(1, 0);
  circuit.push(Gate::ry(kPi / 2, 0));
  circuit.push(Gate::phase(kPi / 2, 0));
  const StateVector state = simulate(circuit);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(test::complex_close(state.amplitudes[0], {inv_sqrt2, 0.0}, 1e-15));
  CHECK(test::complex_close(state.amplitudes[1], {0.0, inv_sqrt2}, 1e-15));
}

TEST_CASE("MCRot honors wildcard controls") {
  // Rotation of qubit 2 controlled on qubit 0 = 1, qubit 1 free.
  Circuit circuit(3, 0);
  circuit.push(Gate::ry(kPi / 2, 1));  // spread qubit 1
  circuit.push(Gate::x(0));
  circuit.push(Gate::mcrot(ControlPattern{"1e", 2}, kPi, 0.0));
  const StateVector state = simulate(circuit);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(test::complex_close(state.amplitudes[0b101], {inv_sqrt2, 0.0}, 1e-12));
  CHECK(test::complex_close(state.amplitudes[0b111], {inv_sqrt2, 0.0}, 1e-12));
  CHECK(test::complex_close(state.amplitudes[0b100], {0.0, 0.0}, 1e-12));
}

TEST_CASE("simulate_support can start from any basis state") {
  Circuit circuit(2, 0);
  circuit.push(Gate::cnot(0, 1));
  const SparseState state = simulate_support(circuit, 0b10);
  REQUIRE(state.entries.size() == 1);
  CHECK(state.entries[0].first == 0b11);
}

TEST_CASE("tracked and reference engines agree on random circuits") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    const uint32_t width = 2 + static_cast<uint32_t>(rng() % 5);
    const Circuit circuit = test::random_circuit(width, 25, rng);
    const uint64_t basis = rng() % (uint64_t{1} << width);
    const StateVector tracked = simulate_support(circuit, basis).densified();
    const StateVector reference = simulate_reference(circuit, basis);
    REQUIRE(tracked.amplitudes.size() == reference.amplitudes.size());
    for (size_t a = 0; a < tracked.amplitudes.size(); ++a) {
      CHECK(test::complex_close(tracked.amplitudes[a], reference.amplitudes[a],
                                1e-13));
    }
  }
}

TEST_CASE("norm is preserved through deep random circuits") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 10; ++i) {
    const Circuit circuit = test::random_circuit(5, 200, rng);
    CHECK(simulate_support(circuit).norm() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("simulator rejects oversized or malformed circuits") {
  CHECK_THROWS_AS(simulate(Circuit(25, 0)), std::invalid_argument);
  Circuit bad(2, 0);
  bad.gates.push_back(Gate::x(5));  // bypass push() to hit the simulator check
  CHECK_THROWS_AS(simulate(bad), std::invalid_argument);
  CHECK_THROWS_AS(simulate_support(Circuit(2, 0), 4), std::invalid_argument);
}

TEST_CASE("fidelity is 1 on the exact target and under a global phase") {
  const SparseVector target(1, {SparseEntry{1, {1.0, 0.0}}});
  Circuit circuit(1, 0);
  circuit.push(Gate::x(0));
  CHECK(fidelity(simulate(circuit), target) == doctest::Approx(1.0));

  circuit.push(Gate::phase(0.8, 0));  // e^{i 0.8} |1>
  CHECK(fidelity(simulate(circuit), target) == doctest::Approx(1.0));
}

TEST_CASE("fidelity of |0> against the uniform pair is 1/sqrt(2)") {
  const SparseVector target(
      1, {SparseEntry{0, {1.0, 0.0}}, SparseEntry{1, {1.0, 0.0}}});
  CHECK(fidelity(simulate(Circuit(1, 0)), target) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("fidelity rejects unrestored ancillas") {
  Circuit circuit(1, 1);
  circuit.push(Gate::x(0));
  circuit.push(Gate::x(1));  // dirty ancilla
  const SparseVector target(1, {SparseEntry{1, {1.0, 0.0}}});
  CHECK_THROWS_AS(fidelity(simulate(circuit), target), std::runtime_error);
  CHECK_THROWS_AS(fidelity(simulate_support(circuit), target),
                  std::runtime_error);
}

TEST_CASE("fidelity agrees between the dense and sparse state forms") {
  std::mt19937_64 rng(47);
  const SparseVector target = test::reference_vector();
  Circuit circuit = test::random_circuit(3, 15, rng);
  const double dense = fidelity(simulate(circuit), target);
  const double sparse = fidelity(simulate_support(circuit), target);
  CHECK(dense == doctest::Approx(sparse).epsilon(1e-12));
}

TEST_CASE("dump_state lists only amplitudes above threshold") {
  Circuit circuit(2, 0);
  circuit.push(Gate::x(1));
  const std::string dump = dump_state(simulate(circuit));
  CHECK(dump == "1 1 0\n");
}
