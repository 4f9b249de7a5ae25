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

#include <random>

#include "doctest.h"
#include "sparseprep/circuit.hpp"
#include "sparseprep/io.hpp"
#include "sparseprep/lowering.hpp"
#include "test_util.hpp"

using namespace sparseprep;

TEST_CASE("GateCounts addition is commutative, associative, has a zero") {
  const GateCounts a{1, 2, 3};
  const GateCounts b{4, 0, 6};
  const GateCounts c{2, 9, 1};
  CHECK(a + b == b + a);
  CHECK((a + b) + c == a + (b + c));
  CHECK(a + GateCounts{} == a);
}

TEST_CASE("ControlPattern accessors") {
  const ControlPattern pattern{"0e1", 3};
  CHECK(pattern.effective_controls() == 2);
  CHECK(pattern.control_qubits() == std::vector<uint32_t>{0, 2});
  CHECK(pattern.hamming_weight() == 1);
  // width 4: qubit 0 must be 0, qubit 2 must be 1.
  CHECK(pattern.matches(0b0010, 4));
  CHECK(pattern.matches(0b0110, 4));
  CHECK_FALSE(pattern.matches(0b1010, 4));
  CHECK_FALSE(pattern.matches(0b0000, 4));
}

TEST_CASE("gate factories validate operands") {
  CHECK_THROWS_AS(Gate::cnot(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Gate::toffoli(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Gate::mcrot(ControlPattern{"01", 1}, 1.0, 0.0),
                  std::invalid_argument);  // target inside the pattern
  CHECK_THROWS_AS(Gate::mcrot(ControlPattern{"0x", 2}, 1.0, 0.0),
                  std::invalid_argument);  // bad symbol
  CHECK_NOTHROW(Gate::mcrot(ControlPattern{"0e", 1}, 1.0, 0.0));
}

TEST_CASE("Circuit::push rejects out-of-range operands") {
  Circuit circuit(2, 0);
  CHECK_THROWS_AS(circuit.push(Gate::x(2)), std::invalid_argument);
  CHECK_NOTHROW(circuit.push(Gate::x(1)));
}

TEST_CASE("Circuit::append merges ancilla demand and concatenates") {
  Circuit a(3, 1);
  a.push(Gate::x(3));
  Circuit b(3, 2);
  b.push(Gate::cnot(0, 4));
  a.append(b);
  CHECK(a.n_ancilla == 2);
  CHECK(a.gates.size() == 2);
  Circuit other(2, 0);
  CHECK_THROWS_AS(other.append(a), std::invalid_argument);
}

TEST_CASE("count_gates tallies variants and requires lowered input") {
  Circuit circuit(3, 1);
  circuit.push(Gate::x(0));
  circuit.push(Gate::ry(0.5, 1));
  circuit.push(Gate::phase(0.25, 2));
  circuit.push(Gate::cnot(0, 1));
  circuit.push(Gate::toffoli(0, 1, 3));
  CHECK(count_gates(circuit) == GateCounts{1, 1, 3});
  CHECK(count_gates(Circuit{}) == GateCounts{});

  SUBCASE("concatenation adds counts") {
    Circuit tail(3, 1);
    tail.push(Gate::cnot(2, 3));
    const GateCounts before = count_gates(circuit) + count_gates(tail);
    circuit.append(tail);
    CHECK(count_gates(circuit) == before);
  }

  SUBCASE("MCRot is rejected") {
    circuit.push(Gate::mcrot(ControlPattern{"1", 1}, 0.3, 0.0));
    CHECK_THROWS_AS(count_gates(circuit), std::invalid_argument);
  }
}

TEST_CASE("circuit text round trip is exact") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const uint32_t width = 2 + static_cast<uint32_t>(rng() % 5);
    Circuit circuit = test::random_circuit(width, 20, rng);
    circuit.n_ancilla = static_cast<uint32_t>(rng() % 3);
    const Circuit back = parse_circuit(serialize_circuit(circuit));
    CHECK(back == circuit);
  }
}

TEST_CASE("circuit text format matches the documented grammar") {
  Circuit circuit(3, 1);
  circuit.push(Gate::mcrot(ControlPattern{"", 0}, 1.0, 0.0));
  circuit.push(Gate::mcrot(ControlPattern{"1e", 2}, 0.5, -0.25));
  const std::string text = serialize_circuit(circuit);
  CHECK(text == "qubits 3\nancillas 1\nMCROT - 1 0 0\nMCROT 1e 0.5 -0.25 2\n");
  CHECK(parse_circuit(text) == circuit);
}

TEST_CASE("parse_circuit rejects malformed input") {
  CHECK_THROWS_AS(parse_circuit("qubits 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nancillas 0\nH 0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nancillas 0\nCNOT 0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_circuit("ancillas 0\nqubits 2\n"),
                  std::invalid_argument);
}

TEST_CASE("shift_qubits re-homes gates and patterns") {
  Circuit circuit(2, 0);
  circuit.push(Gate::mcrot(ControlPattern{"1", 1}, 0.7, 0.1));
  circuit.push(Gate::cnot(0, 1));
  const Circuit shifted = shift_qubits(circuit, 2, 4);
  CHECK(shifted.n_main == 4);
  CHECK(shifted.gates[0].pattern.bits == "ee1");
  CHECK(shifted.gates[0].pattern.target == 3);
  CHECK(shifted.gates[1].a == 2);
  CHECK(shifted.gates[1].b == 3);
}
