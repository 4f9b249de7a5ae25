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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sparseprep/experiments.hpp"
#include "sparseprep/io.hpp"
#include "sparseprep/lowering.hpp"
#include "sparseprep/pipeline.hpp"
#include "sparseprep/simulator.hpp"

namespace {

using namespace sparseprep;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

// "2,4,16..64" -> {2, 4, 16, 17, ..., 64}; "a..b:s" steps by s.
std::vector<uint64_t> parse_range_list(const std::string& text) {
  std::vector<uint64_t> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    const size_t dots = token.find("..");
    if (dots == std::string::npos) {
      values.push_back(std::stoull(token));
      continue;
    }
    const uint64_t first = std::stoull(token.substr(0, dots));
    std::string rest = token.substr(dots + 2);
    uint64_t step = 1;
    if (const size_t colon = rest.find(':'); colon != std::string::npos) {
      step = std::stoull(rest.substr(colon + 1));
      rest = rest.substr(0, colon);
    }
    const uint64_t last = std::stoull(rest);
    if (step == 0 || last < first) {
      throw std::runtime_error("bad range token '" + token + "'");
    }
    for (uint64_t v = first; v <= last; v += step) values.push_back(v);
  }
  if (values.empty()) throw std::runtime_error("empty range '" + text + "'");
  return values;
}

std::vector<uint32_t> parse_qubit_list(const std::string& text) {
  std::vector<uint32_t> values;
  for (uint64_t v : parse_range_list(text)) {
    values.push_back(static_cast<uint32_t>(v));
  }
  return values;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) values.push_back(std::stod(token));
  }
  if (values.empty()) throw std::runtime_error("empty list '" + text + "'");
  return values;
}

CompileOptions make_options(const std::string& pipeline, bool optimize) {
  CompileOptions options;
  if (pipeline == "gr") {
    options.pipeline = PipelineKind::Gr;
  } else if (pipeline == "permgr") {
    options.pipeline = PipelineKind::PermGr;
  } else {
    throw std::runtime_error("unknown pipeline '" + pipeline +
                             "' (expected gr or permgr)");
  }
  options.optimize = optimize;
  return options;
}

VectorKind make_kind(const std::string& name) {
  const auto kind = vector_kind_from_string(name);
  if (!kind) {
    throw std::runtime_error("unknown vector kind '" + name +
                             "' (expected complex, real or uniform)");
  }
  return *kind;
}

int run(int argc, char** argv) {
  CLI::App app{"sparseprep: compile sparse vectors into state-preparation circuits"};
  app.require_subcommand(1);

  // compile
  auto* cmd_compile = app.add_subcommand("compile", "compile a sparse vector");
  std::string compile_pipeline = "gr";
  std::string compile_input, compile_output;
  bool compile_optimize = false, compile_high_level = false;
  cmd_compile->add_option("--pipeline", compile_pipeline, "gr | permgr");
  cmd_compile->add_option("--input", compile_input, "sparse-vector file")
      ->required();
  cmd_compile->add_option("--output", compile_output, "circuit file")
      ->required();
  cmd_compile->add_flag("--optimize", compile_optimize, "merge mergeable gates");
  cmd_compile->add_flag("--high-level", compile_high_level,
                        "emit MCROT gates instead of lowering");
  cmd_compile->callback([&] {
    const SparseVector vector = parse_sparse_vector(read_file(compile_input));
    const CompileResult result =
        compile(vector, make_options(compile_pipeline, compile_optimize));
    const Circuit& out = compile_high_level ? result.high_level : result.lowered;
    write_file(compile_output, serialize_circuit(out));
    std::cout << "wrote " << compile_output << ": qubits " << out.n_main
              << " ancillas " << out.n_ancilla << " gates " << out.gates.size()
              << "\n";
  });

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "simulate and print fidelity");
  std::string verify_pipeline = "gr";
  std::string verify_input;
  bool verify_optimize = false;
  cmd_verify->add_option("--pipeline", verify_pipeline, "gr | permgr");
  cmd_verify->add_option("--input", verify_input, "sparse-vector file")
      ->required();
  cmd_verify->add_flag("--optimize", verify_optimize, "merge mergeable gates");
  cmd_verify->callback([&] {
    const SparseVector vector = parse_sparse_vector(read_file(verify_input));
    const CompileResult result =
        compile(vector, make_options(verify_pipeline, verify_optimize));
    const double f = fidelity(simulate_support(result.lowered), vector);
    std::cout << "fidelity " << format_double(f) << "\n";
  });

  // count
  auto* cmd_count = app.add_subcommand("count", "tally gates of a circuit file");
  std::string count_input;
  cmd_count->add_option("--input", count_input, "circuit file")->required();
  cmd_count->callback([&] {
    const Circuit circuit = parse_circuit(read_file(count_input));
    const GateCounts counts = count_gates(circuit);
    std::cout << "toffoli " << counts.toffoli << "\n"
              << "cnot " << counts.cnot << "\n"
              << "single " << counts.single_qubit << "\n"
              << "total " << counts.total() << "\n";
  });

  // bench
  auto* cmd_bench = app.add_subcommand("bench", "random-instance studies");
  cmd_bench->require_subcommand(1);

  auto* cmd_scaling = cmd_bench->add_subcommand(
      "scaling", "gate counts over an (n, d) sweep, as CSV");
  std::string scaling_pipelines = "gr,gr-opt,permgr";
  std::string scaling_kind = "complex";
  std::string scaling_n, scaling_d;
  std::string scaling_csv, scaling_svg;
  uint32_t scaling_trials = 10;
  uint64_t scaling_seed = 0;
  uint32_t scaling_threads = 0;
  bool scaling_verify = false, scaling_timing = false;
  cmd_scaling->add_option("--pipeline", scaling_pipelines,
                          "comma list of gr|gr-opt|permgr");
  cmd_scaling->add_option("--kind", scaling_kind, "complex | real | uniform");
  cmd_scaling->add_option("--n", scaling_n, "qubit counts, e.g. 8..16:2")
      ->required();
  cmd_scaling->add_option("--d", scaling_d, "sparsities, e.g. 2,4,8,16")
      ->required();
  cmd_scaling->add_option("--trials", scaling_trials, "instances per point");
  cmd_scaling->add_option("--seed", scaling_seed, "master seed");
  cmd_scaling->add_option("--threads", scaling_threads, "worker threads");
  cmd_scaling->add_option("--csv", scaling_csv, "output CSV path")->required();
  cmd_scaling->add_option("--svg", scaling_svg, "optional SVG plot path");
  cmd_scaling->add_flag("--verify", scaling_verify,
                        "simulate every instance before recording it");
  cmd_scaling->add_flag("--timing", scaling_timing,
                        "record wall time (breaks byte-stable output)");
  cmd_scaling->callback([&] {
    ScalingConfig config;
    config.pipelines.clear();
    std::stringstream stream(scaling_pipelines);
    std::string token;
    while (std::getline(stream, token, ',')) {
      const auto pipeline = bench_pipeline_from_string(token);
      if (!pipeline) throw std::runtime_error("unknown pipeline '" + token + "'");
      config.pipelines.push_back(*pipeline);
    }
    config.kind = make_kind(scaling_kind);
    config.qubit_counts = parse_qubit_list(scaling_n);
    config.sparsities = parse_range_list(scaling_d);
    config.trials = scaling_trials;
    config.seed = scaling_seed;
    config.verify = scaling_verify;
    config.timing = scaling_timing;
    config.threads = scaling_threads;
    const ScalingOutput output = run_scaling(config);
    write_file(scaling_csv, output.csv);
    write_file(scaling_csv + ".summary.csv", output.summary_csv);
    if (!scaling_svg.empty()) {
      write_file(scaling_svg, render_scaling_svg(output.rows));
    }
    std::cout << "wrote " << scaling_csv << " (" << output.rows.size()
              << " rows) and " << scaling_csv << ".summary.csv\n";
  });

  auto* cmd_ratio = cmd_bench->add_subcommand(
      "ratio", "permgr/gr-opt and gr-opt/gr Toffoli ratios over densities");
  std::string ratio_kinds = "complex";
  std::string ratio_n, ratio_density;
  std::string ratio_csv, ratio_svg;
  uint32_t ratio_trials = 10;
  uint64_t ratio_seed = 0;
  uint32_t ratio_threads = 0;
  cmd_ratio->add_option("--kind", ratio_kinds, "comma list of vector kinds");
  cmd_ratio->add_option("--n", ratio_n, "qubit counts")->required();
  cmd_ratio->add_option("--density", ratio_density, "densities d/N, e.g. 1e-3,1e-2")
      ->required();
  cmd_ratio->add_option("--trials", ratio_trials, "instances per point");
  cmd_ratio->add_option("--seed", ratio_seed, "master seed");
  cmd_ratio->add_option("--threads", ratio_threads, "worker threads");
  cmd_ratio->add_option("--csv", ratio_csv, "output CSV path")->required();
  cmd_ratio->add_option("--svg", ratio_svg, "optional SVG plot path");
  cmd_ratio->callback([&] {
    RatioConfig config;
    config.kinds.clear();
    std::stringstream stream(ratio_kinds);
    std::string token;
    while (std::getline(stream, token, ',')) {
      if (!token.empty()) config.kinds.push_back(make_kind(token));
    }
    config.qubit_counts = parse_qubit_list(ratio_n);
    config.densities = parse_double_list(ratio_density);
    config.trials = ratio_trials;
    config.seed = ratio_seed;
    config.threads = ratio_threads;
    const RatioOutput output = run_ratio(config);
    write_file(ratio_csv, output.csv);
    if (!ratio_svg.empty()) write_file(ratio_svg, render_ratio_svg(output.rows));
    std::cout << "wrote " << ratio_csv << " (" << output.rows.size()
              << " rows)\n";
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
}
