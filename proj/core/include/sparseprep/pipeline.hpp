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

#include "sparseprep/angle_table.hpp"
#include "sparseprep/circuit.hpp"
#include "sparseprep/sparse_vector.hpp"

namespace sparseprep {

enum class PipelineKind { Gr, PermGr };

struct CompileOptions {
  PipelineKind pipeline = PipelineKind::Gr;
  bool optimize = false;  // run the gate-merging pass over the rotation table
};

struct CompileResult {
  AngleTable table;    // Gr: the full table; PermGr: the dense-stage table
  Circuit high_level;  // MCRot tier (PermGr: rotations plus cycle primitives)
  Circuit lowered;
};

/// Compiles a sparse vector into a preparation circuit. The input is
/// normalized internally.
CompileResult compile(const SparseVector& input, const CompileOptions& options);

}  // namespace sparseprep
