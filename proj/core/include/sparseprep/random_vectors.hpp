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

#include <optional>
#include <string>

#include "sparseprep/sparse_vector.hpp"

namespace sparseprep {

/// Amplitude ensembles of the random instance generator.
enum class VectorKind { Complex, Real, Uniform };

const char* to_string(VectorKind kind);
std::optional<VectorKind> vector_kind_from_string(const std::string& name);

/// Per-instance seed: splitmix64 finalizer folded over the master seed and
/// the instance coordinates, so sweep points are independent of evaluation
/// order.
uint64_t derive_seed(uint64_t master_seed, uint32_t n, uint64_t d,
                     uint32_t trial, VectorKind kind);

/// Draws d distinct locations uniformly from [0, 2^n) and fills them with
/// i.i.d. standard complex Gaussians, i.i.d. real Gaussians, or the constant
/// 1/sqrt(d); the result is normalized. Fully deterministic in the seed:
/// mt19937_64 plus a fixed 53-bit uniform, Box-Muller transform, and Floyd
/// sampling (the standard-library distributions are implementation-defined,
/// so they are not used here).
SparseVector gen_random_sparse(uint32_t n, uint64_t d, VectorKind kind,
                               uint64_t seed);

}  // namespace sparseprep
