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

#include "sparseprep/random_vectors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace sparseprep {

namespace {

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) via threshold rejection.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
  if ((bound & (bound - 1)) == 0) return rng() & (bound - 1);
  const uint64_t remainder = (UINT64_MAX % bound + 1) % bound;  // 2^64 mod bound
  const uint64_t threshold = 0 - remainder;
  uint64_t sample = rng();
  while (sample >= threshold) sample = rng();
  return sample % bound;
}

std::pair<double, double> gaussian_pair(std::mt19937_64& rng) {
  const double u1 = 1.0 - uniform53(rng);  // (0, 1]: keeps the log finite
  const double u2 = uniform53(rng);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace

const char* to_string(VectorKind kind) {
  switch (kind) {
    case VectorKind::Complex:
      return "complex";
    case VectorKind::Real:
      return "real";
    case VectorKind::Uniform:
      return "uniform";
  }
  return "?";
}

std::optional<VectorKind> vector_kind_from_string(const std::string& name) {
  if (name == "complex") return VectorKind::Complex;
  if (name == "real") return VectorKind::Real;
  if (name == "uniform") return VectorKind::Uniform;
  return std::nullopt;
}

uint64_t derive_seed(uint64_t master_seed, uint32_t n, uint64_t d,
                     uint32_t trial, VectorKind kind) {
  uint64_t state = master_seed;
  for (uint64_t field : {uint64_t{n}, d, uint64_t{trial},
                         static_cast<uint64_t>(kind)}) {
    state = mix64(state + 0x9E3779B97F4A7C15ull + field);
  }
  return state;
}

SparseVector gen_random_sparse(uint32_t n, uint64_t d, VectorKind kind,
                               uint64_t seed) {
  if (n == 0 || n > 63) {
    throw std::invalid_argument("qubit count must be in [1, 63]");
  }
  const uint64_t dim = uint64_t{1} << n;
  if (d == 0 || d > dim) {
    throw std::invalid_argument("sparsity must be in [1, 2^n]");
  }
  std::mt19937_64 rng(seed);

  // Floyd's sampling: d distinct locations, O(d) draws.
  std::set<uint64_t> locations;
  for (uint64_t j = dim - d; j < dim; ++j) {
    const uint64_t candidate = uniform_below(rng, j + 1);
    if (!locations.insert(candidate).second) locations.insert(j);
  }

  std::vector<SparseEntry> entries;
  entries.reserve(d);
  const double uniform_amplitude = 1.0 / std::sqrt(static_cast<double>(d));
  for (uint64_t location : locations) {
    std::complex<double> amplitude;
    switch (kind) {
      case VectorKind::Complex:
        do {
          const auto [re, im] = gaussian_pair(rng);
          amplitude = {re, im};
        } while (amplitude == std::complex<double>{0.0, 0.0});
        break;
      case VectorKind::Real:
        do {
          amplitude = {gaussian_pair(rng).first, 0.0};
        } while (amplitude == std::complex<double>{0.0, 0.0});
        break;
      case VectorKind::Uniform:
        amplitude = {uniform_amplitude, 0.0};
        break;
    }
    entries.push_back(SparseEntry{location, amplitude});
  }
  return SparseVector(n, std::move(entries)).normalized();
}

}  // namespace sparseprep
