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

#include "sparseprep/pipeline.hpp"

#include "sparseprep/grover_rudolph.hpp"
#include "sparseprep/lowering.hpp"
#include "sparseprep/optimizer.hpp"
#include "sparseprep/perm_gr.hpp"

namespace sparseprep {

CompileResult compile(const SparseVector& input, const CompileOptions& options) {
  const SparseVector vector = input.normalized();
  CompileResult result;
  switch (options.pipeline) {
    case PipelineKind::Gr:
      result.table = find_sparse_angles(vector);
      if (options.optimize) result.table = optimize_table(result.table);
      result.high_level = build_circuit(result.table, vector.num_qubits());
      break;
    case PipelineKind::PermGr:
      result.table = perm_gr_stage_table(vector, options.optimize);
      result.high_level = perm_gr_circuit(vector, options.optimize);
      break;
  }
  result.lowered = lower_circuit(result.high_level);
  return result;
}

}  // namespace sparseprep
