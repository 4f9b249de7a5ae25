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
#include "sparseprep/io.hpp"
#include "sparseprep/random_vectors.hpp"
#include "sparseprep/sparse_vector.hpp"
#include "test_util.hpp"

using namespace sparseprep;

TEST_CASE("parse_sparse_vector reads the documented format") {
  const SparseVector v = parse_sparse_vector("n=3\n1 0.57735 0\n6 0.8165 0\n");
  CHECK(v.num_qubits() == 3);
  REQUIRE(v.sparsity() == 2);
  CHECK(v.entries()[0].location == 1);
  CHECK(v.entries()[0].amplitude == std::complex<double>{0.57735, 0.0});
  CHECK(v.entries()[1].location == 6);
  CHECK(v.entries()[1].amplitude == std::complex<double>{0.8165, 0.0});
}

TEST_CASE("parse_sparse_vector handles a basis state") {
  const SparseVector v = parse_sparse_vector("n=1\n0 1 0\n");
  CHECK(v.num_qubits() == 1);
  REQUIRE(v.sparsity() == 1);
  CHECK(v.entries()[0] == SparseEntry{0, {1.0, 0.0}});
}

TEST_CASE("parse_sparse_vector sorts unsorted input") {
  const SparseVector v = parse_sparse_vector("n=2\n3 0 0.5\n0 0.5 0\n");
  REQUIRE(v.sparsity() == 2);
  CHECK(v.entries()[0] == SparseEntry{0, {0.5, 0.0}});
  CHECK(v.entries()[1] == SparseEntry{3, {0.0, 0.5}});
}

TEST_CASE("parse_sparse_vector skips comments and blank lines") {
  const SparseVector v =
      parse_sparse_vector("# target\nn=2\n\n# entry\n1 1 0\n");
  CHECK(v.sparsity() == 1);
}

TEST_CASE("parse_sparse_vector rejects bad input") {
  CHECK_THROWS_AS(parse_sparse_vector("n=2\n1 1 0\n1 0.5 0\n"),
                  std::invalid_argument);  // duplicate location
  CHECK_THROWS_AS(parse_sparse_vector("n=2\n4 1 0\n"),
                  std::invalid_argument);  // location >= 2^n
  CHECK_THROWS_AS(parse_sparse_vector("n=2\n1 0 0\n"),
                  std::invalid_argument);  // zero amplitude
  CHECK_THROWS_AS(parse_sparse_vector("n=2\n1 abc 0\n"),
                  std::invalid_argument);  // malformed number
  CHECK_THROWS_AS(parse_sparse_vector("1 1 0\n"),
                  std::invalid_argument);  // missing header
  CHECK_THROWS_AS(parse_sparse_vector("n=2\n"),
                  std::invalid_argument);  // empty vector
}

TEST_CASE("normalize keeps unit vectors and rescales the rest") {
  const SparseVector reference = test::reference_vector();
  const SparseVector same = reference.normalized();
  for (size_t i = 0; i < 2; ++i) {
    CHECK(test::complex_close(same.entries()[i].amplitude,
                              reference.entries()[i].amplitude, 1e-15));
  }

  const SparseVector two(1, {SparseEntry{0, {2.0, 0.0}}});
  CHECK(two.normalized().entries()[0].amplitude ==
        std::complex<double>{1.0, 0.0});

  const SparseVector pair(
      1, {SparseEntry{0, {1.0, 0.0}}, SparseEntry{1, {1.0, 0.0}}});
  const SparseVector scaled = pair.normalized();
  CHECK(test::complex_close(scaled.entries()[0].amplitude,
                            {1.0 / std::sqrt(2.0), 0.0}, 1e-15));
  CHECK(test::complex_close(scaled.entries()[1].amplitude,
                            {1.0 / std::sqrt(2.0), 0.0}, 1e-15));
}

TEST_CASE("normalize is idempotent within 1e-15") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng() % 8);
    const uint64_t d = 1 + rng() % (uint64_t{1} << n);
    const SparseVector v = gen_random_sparse(n, d, VectorKind::Complex, rng());
    const SparseVector once = v.normalized();
    const SparseVector twice = once.normalized();
    for (uint64_t e = 0; e < d; ++e) {
      CHECK(test::complex_close(once.entries()[e].amplitude,
                                twice.entries()[e].amplitude, 1e-15));
    }
    CHECK(once.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("serialize/parse round trip is exact") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const uint32_t n = 1 + static_cast<uint32_t>(rng() % 10);
    const uint64_t d = 1 + rng() % std::min<uint64_t>(uint64_t{1} << n, 32);
    const VectorKind kind =
        static_cast<VectorKind>(rng() % 3);
    const SparseVector v = gen_random_sparse(n, d, kind, rng());
    const SparseVector back = parse_sparse_vector(serialize_sparse_vector(v));
    CHECK(back == v);
  }
}

TEST_CASE("densified places amplitudes at their locations") {
  const auto dense = test::reference_vector().densified();
  REQUIRE(dense.size() == 8);
  CHECK(dense[1] == std::complex<double>{std::sqrt(1.0 / 3.0), 0.0});
  CHECK(dense[6] == std::complex<double>{std::sqrt(2.0 / 3.0), 0.0});
  CHECK(dense[0] == std::complex<double>{0.0, 0.0});
}
