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

#include "sparseprep/sparse_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sparseprep {

SparseVector::SparseVector(uint32_t num_qubits, std::vector<SparseEntry> entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
  if (num_qubits_ > 63) {
    throw std::invalid_argument("qubit count " + std::to_string(num_qubits_) +
                                " exceeds 63");
  }
  if (entries_.empty()) {
    throw std::invalid_argument("sparse vector must have at least one entry");
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const SparseEntry& a, const SparseEntry& b) {
              return a.location < b.location;
            });
  const uint64_t dim = dimension();
  uint64_t previous = 0;
  bool first = true;
  for (const SparseEntry& entry : entries_) {
    if (entry.location >= dim) {
      throw std::invalid_argument("location " + std::to_string(entry.location) +
                                  " out of range for " +
                                  std::to_string(num_qubits_) + " qubits");
    }
    if (!first && entry.location == previous) {
      throw std::invalid_argument("duplicate location " +
                                  std::to_string(entry.location));
    }
    if (entry.amplitude == std::complex<double>{0.0, 0.0}) {
      throw std::invalid_argument("zero amplitude at location " +
                                  std::to_string(entry.location));
    }
    previous = entry.location;
    first = false;
  }
}

double SparseVector::norm() const {
  double sum = 0.0;
  for (const SparseEntry& entry : entries_) {
    sum += std::norm(entry.amplitude);
  }
  return std::sqrt(sum);
}

SparseVector SparseVector::normalized() const {
  const double scale = 1.0 / norm();
  std::vector<SparseEntry> scaled = entries_;
  for (SparseEntry& entry : scaled) {
    entry.amplitude *= scale;
  }
  return SparseVector(num_qubits_, std::move(scaled));
}

std::vector<std::complex<double>> SparseVector::densified() const {
  if (num_qubits_ > 24) {
    throw std::invalid_argument("densification limited to 24 qubits");
  }
  std::vector<std::complex<double>> dense(dimension());
  for (const SparseEntry& entry : entries_) {
    dense[entry.location] = entry.amplitude;
  }
  return dense;
}

}  // namespace sparseprep
