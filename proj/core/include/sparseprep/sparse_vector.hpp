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

#include <complex>
#include <cstdint>
#include <vector>

namespace sparseprep {

/// One nonzero amplitude of a sparse state: basis-state index plus value.
struct SparseEntry {
  uint64_t location = 0;
  std::complex<double> amplitude{0.0, 0.0};

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sparse complex vector over n qubits.
///
/// Locations are strictly increasing basis-state indices in [0, 2^n) and
/// every stored amplitude is nonzero. Index <-> bit-string conversion is
/// big-endian: qubit 0 holds the most significant bit of a location, so
/// location 6 on three qubits is the basis state |110>.
///
/// n = 0 is permitted (a single amplitude at location 0); it shows up as the
/// deepest coarse-graining level. The text format only carries n >= 1.
class SparseVector {
 public:
  /// Validates and stores the entries, sorting them by location first.
  /// Throws std::invalid_argument on duplicate locations, locations >= 2^n,
  /// zero amplitudes, or an empty entry list.
  SparseVector(uint32_t num_qubits, std::vector<SparseEntry> entries);

  uint32_t num_qubits() const { return num_qubits_; }
  uint64_t dimension() const { return uint64_t{1} << num_qubits_; }
  const std::vector<SparseEntry>& entries() const { return entries_; }

  /// Number of nonzero amplitudes (d).
  uint64_t sparsity() const { return entries_.size(); }

  double norm() const;

  /// Returns the unit-norm rescaling of this vector; locations unchanged.
  SparseVector normalized() const;

  /// Dense amplitude array of size 2^n. Guarded to n <= 24.
  std::vector<std::complex<double>> densified() const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  uint32_t num_qubits_ = 0;
  std::vector<SparseEntry> entries_;
};

}  // namespace sparseprep
