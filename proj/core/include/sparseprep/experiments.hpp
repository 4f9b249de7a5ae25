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

#include <string>
#include <vector>

#include "sparseprep/circuit.hpp"
#include "sparseprep/random_vectors.hpp"

namespace sparseprep {

/// Pipeline tag of a benchmark row: plain Grover-Rudolph, Grover-Rudolph
/// with the merge optimizer, or Permutation Grover-Rudolph.
enum class BenchPipeline { Gr, GrOpt, PermGr };

const char* to_string(BenchPipeline pipeline);
std::optional<BenchPipeline> bench_pipeline_from_string(const std::string& name);

/// One compiled random instance. Wall time is zero unless timing was
/// requested, which keeps the CSV byte-stable across runs.
struct ExperimentRow {
  BenchPipeline pipeline = BenchPipeline::Gr;
  VectorKind kind = VectorKind::Complex;
  uint32_t n = 0;
  uint64_t d = 0;
  uint64_t seed = 0;
  GateCounts counts;
  uint64_t micros = 0;
};

struct ScalingConfig {
  std::vector<BenchPipeline> pipelines{BenchPipeline::Gr};
  VectorKind kind = VectorKind::Complex;
  std::vector<uint32_t> qubit_counts;
  std::vector<uint64_t> sparsities;  // points with d > 2^n are skipped
  uint32_t trials = 1;
  uint64_t seed = 0;
  bool verify = false;  // simulate each instance; fidelity >= 1 - 1e-9 or fail
  bool timing = false;
  uint32_t threads = 0;  // 0: hardware concurrency
};

struct ScalingOutput {
  std::vector<ExperimentRow> rows;
  std::string csv;          // pipeline,kind,n,d,seed,toffoli,cnot,single,micros
  std::string summary_csv;  // mean/stddev per (pipeline, kind, n, d)
};

/// Compiles trials x sweep-points random instances on a worker pool and
/// tabulates lowered gate counts. Deterministic in the seed: rows only
/// depend on per-instance derived seeds, never on scheduling.
ScalingOutput run_scaling(const ScalingConfig& config);

struct RatioConfig {
  std::vector<uint32_t> qubit_counts;
  std::vector<double> densities;  // d = round(density * 2^n), clamped to >= 1
  std::vector<VectorKind> kinds{VectorKind::Complex};
  uint32_t trials = 1;
  uint64_t seed = 0;
  uint32_t threads = 0;
};

/// Toffoli-count ratios per sweep point, averaged as ratios of per-point
/// mean counts over the same random vectors.
struct RatioRow {
  VectorKind kind = VectorKind::Complex;
  uint32_t n = 0;
  uint64_t d = 0;
  double density = 0.0;
  double permgr_over_gropt = 0.0;
  double gropt_over_gr = 0.0;
};

struct RatioOutput {
  std::vector<RatioRow> rows;
  std::string csv;  // kind,n,d,density,ratio_permgr_gropt,ratio_gropt_gr
};

RatioOutput run_ratio(const RatioConfig& config);

// Minimal SVG scatter/line renderings of a sweep; the CSV is the contract,
// these are a convenience.
std::string render_scaling_svg(const std::vector<ExperimentRow>& rows);
std::string render_ratio_svg(const std::vector<RatioRow>& rows);

}  // namespace sparseprep
