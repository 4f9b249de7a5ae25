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

#include "sparseprep/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "sparseprep/io.hpp"
#include "sparseprep/lowering.hpp"
#include "sparseprep/pipeline.hpp"
#include "sparseprep/simulator.hpp"

namespace sparseprep {

namespace {

constexpr double kVerifyFidelity = 1.0 - 1e-9;

CompileOptions to_options(BenchPipeline pipeline) {
  switch (pipeline) {
    case BenchPipeline::Gr:
      return CompileOptions{PipelineKind::Gr, false};
    case BenchPipeline::GrOpt:
      return CompileOptions{PipelineKind::Gr, true};
    case BenchPipeline::PermGr:
      return CompileOptions{PipelineKind::PermGr, false};
  }
  return {};
}

// Runs tasks [0, count) on a small pool; worker exceptions surface on the
// caller after everything drains.
void run_parallel(uint64_t count, uint32_t threads,
                  const std::function<void(uint64_t)>& task) {
  uint32_t workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<uint32_t>(workers, 32));
  if (count < 2 || workers == 1) {
    for (uint64_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (uint32_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      while (!failed.load(std::memory_order_relaxed)) {
        const uint64_t index = next.fetch_add(1);
        if (index >= count) break;
        try {
          task(index);
        } catch (...) {
          errors[w] = std::current_exception();
          failed.store(true, std::memory_order_relaxed);
          break;
        }
      }
    });
  }
  for (std::thread& worker : pool) worker.join();
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

GateCounts compile_and_count(const SparseVector& vector, BenchPipeline pipeline,
                             bool verify) {
  const CompileResult result = compile(vector, to_options(pipeline));
  if (verify) {
    const double f = fidelity(simulate_support(result.lowered), vector);
    if (f < kVerifyFidelity) {
      throw std::runtime_error("verification failed: fidelity " +
                               format_double(f) + " on a " +
                               std::string(to_string(pipeline)) + " instance");
    }
  }
  return count_gates(result.lowered);
}

std::string counts_fields(const GateCounts& counts) {
  return std::to_string(counts.toffoli) + "," + std::to_string(counts.cnot) +
         "," + std::to_string(counts.single_qubit);
}

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
};

Stats stats_of(const std::vector<double>& samples) {
  Stats stats;
  if (samples.empty()) return stats;
  double sum = 0.0;
  for (double sample : samples) sum += sample;
  stats.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double squares = 0.0;
    for (double sample : samples) {
      squares += (sample - stats.mean) * (sample - stats.mean);
    }
    stats.stddev = std::sqrt(squares / static_cast<double>(samples.size() - 1));
  }
  return stats;
}

}  // namespace

const char* to_string(BenchPipeline pipeline) {
  switch (pipeline) {
    case BenchPipeline::Gr:
      return "gr";
    case BenchPipeline::GrOpt:
      return "gr-opt";
    case BenchPipeline::PermGr:
      return "permgr";
  }
  return "?";
}

std::optional<BenchPipeline> bench_pipeline_from_string(const std::string& name) {
  if (name == "gr") return BenchPipeline::Gr;
  if (name == "gr-opt") return BenchPipeline::GrOpt;
  if (name == "permgr") return BenchPipeline::PermGr;
  return std::nullopt;
}

ScalingOutput run_scaling(const ScalingConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("trials must be positive");
  struct Task {
    BenchPipeline pipeline;
    uint32_t n;
    uint64_t d;
    uint32_t trial;
  };
  std::vector<Task> tasks;
  for (BenchPipeline pipeline : config.pipelines) {
    for (uint32_t n : config.qubit_counts) {
      for (uint64_t d : config.sparsities) {
        if (n == 0 || n > 63 || d == 0) {
          throw std::invalid_argument("infeasible sweep point");
        }
        if (n < 64 && d > (uint64_t{1} << n)) continue;
        for (uint32_t trial = 0; trial < config.trials; ++trial) {
          tasks.push_back(Task{pipeline, n, d, trial});
        }
      }
    }
  }

  ScalingOutput output;
  output.rows.resize(tasks.size());
  run_parallel(tasks.size(), config.threads, [&](uint64_t index) {
    const Task& task = tasks[index];
    ExperimentRow row;
    row.pipeline = task.pipeline;
    row.kind = config.kind;
    row.n = task.n;
    row.d = task.d;
    row.seed = derive_seed(config.seed, task.n, task.d, task.trial, config.kind);
    const SparseVector vector =
        gen_random_sparse(task.n, task.d, config.kind, row.seed);
    const auto start = std::chrono::steady_clock::now();
    row.counts = compile_and_count(vector, task.pipeline, config.verify);
    if (config.timing) {
      row.micros = static_cast<uint64_t>(
          std::chrono::duration_cast<std::chrono::microseconds>(
              std::chrono::steady_clock::now() - start)
              .count());
    }
    output.rows[index] = row;
  });

  std::string csv =
      "# sparseprep scaling sweep: amplitudes=" +
      std::string(to_string(config.kind)) +
      " (gaussian ensembles; uniform=1/sqrt(d)), master_seed=" +
      std::to_string(config.seed) + ", trials=" + std::to_string(config.trials) +
      "\npipeline,kind,n,d,seed,toffoli,cnot,single,micros\n";
  for (const ExperimentRow& row : output.rows) {
    csv += std::string(to_string(row.pipeline)) + "," + to_string(row.kind) +
           "," + std::to_string(row.n) + "," + std::to_string(row.d) + "," +
           std::to_string(row.seed) + "," + counts_fields(row.counts) + "," +
           std::to_string(row.micros) + "\n";
  }
  output.csv = std::move(csv);

  std::string summary =
      "pipeline,kind,n,d,trials,toffoli_mean,toffoli_stddev,cnot_mean,"
      "cnot_stddev,single_mean,single_stddev\n";
  for (size_t begin = 0; begin < output.rows.size();) {
    const ExperimentRow& head = output.rows[begin];
    size_t end = begin;
    std::vector<double> toffoli, cnot, single;
    while (end < output.rows.size() && output.rows[end].pipeline == head.pipeline &&
           output.rows[end].n == head.n && output.rows[end].d == head.d) {
      toffoli.push_back(static_cast<double>(output.rows[end].counts.toffoli));
      cnot.push_back(static_cast<double>(output.rows[end].counts.cnot));
      single.push_back(static_cast<double>(output.rows[end].counts.single_qubit));
      ++end;
    }
    const Stats t = stats_of(toffoli);
    const Stats c = stats_of(cnot);
    const Stats s = stats_of(single);
    summary += std::string(to_string(head.pipeline)) + "," +
               to_string(head.kind) + "," + std::to_string(head.n) + "," +
               std::to_string(head.d) + "," + std::to_string(end - begin) + "," +
               format_double(t.mean) + "," + format_double(t.stddev) + "," +
               format_double(c.mean) + "," + format_double(c.stddev) + "," +
               format_double(s.mean) + "," + format_double(s.stddev) + "\n";
    begin = end;
  }
  output.summary_csv = std::move(summary);
  return output;
}

RatioOutput run_ratio(const RatioConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("trials must be positive");
  struct Point {
    VectorKind kind;
    uint32_t n;
    uint64_t d;
    double density;
  };
  std::vector<Point> points;
  for (VectorKind kind : config.kinds) {
    for (uint32_t n : config.qubit_counts) {
      if (n == 0 || n > 63) throw std::invalid_argument("infeasible qubit count");
      const double dim = std::ldexp(1.0, static_cast<int>(n));
      for (double density : config.densities) {
        if (!(density > 0.0) || density > 1.0) {
          throw std::invalid_argument("density must be in (0, 1]");
        }
        uint64_t d = static_cast<uint64_t>(std::llround(density * dim));
        d = std::max<uint64_t>(1, std::min<uint64_t>(d, uint64_t{1} << n));
        points.push_back(Point{kind, n, d, density});
      }
    }
  }

  struct Sample {
    uint64_t gr = 0;
    uint64_t gr_opt = 0;
    uint64_t perm_gr = 0;
  };
  std::vector<Sample> samples(points.size() * config.trials);
  run_parallel(samples.size(), config.threads, [&](uint64_t index) {
    const Point& point = points[index / config.trials];
    const uint32_t trial = static_cast<uint32_t>(index % config.trials);
    const uint64_t seed =
        derive_seed(config.seed, point.n, point.d, trial, point.kind);
    const SparseVector vector =
        gen_random_sparse(point.n, point.d, point.kind, seed);
    Sample sample;
    sample.gr = compile_and_count(vector, BenchPipeline::Gr, false).toffoli;
    sample.gr_opt = compile_and_count(vector, BenchPipeline::GrOpt, false).toffoli;
    sample.perm_gr =
        compile_and_count(vector, BenchPipeline::PermGr, false).toffoli;
    samples[index] = sample;
  });

  RatioOutput output;
  std::string csv =
      "# sparseprep ratio sweep: Toffoli-count ratios of per-point means, "
      "master_seed=" +
      std::to_string(config.seed) + ", trials=" + std::to_string(config.trials) +
      "\nkind,n,d,density,ratio_permgr_gropt,ratio_gropt_gr\n";
  for (size_t p = 0; p < points.size(); ++p) {
    double gr = 0.0, gr_opt = 0.0, perm_gr = 0.0;
    for (uint32_t trial = 0; trial < config.trials; ++trial) {
      const Sample& sample = samples[p * config.trials + trial];
      gr += static_cast<double>(sample.gr);
      gr_opt += static_cast<double>(sample.gr_opt);
      perm_gr += static_cast<double>(sample.perm_gr);
    }
    RatioRow row;
    row.kind = points[p].kind;
    row.n = points[p].n;
    row.d = points[p].d;
    row.density = points[p].density;
    row.permgr_over_gropt = perm_gr / gr_opt;
    row.gropt_over_gr = gr_opt / gr;
    output.rows.push_back(row);
    csv += std::string(to_string(row.kind)) + "," + std::to_string(row.n) + "," +
           std::to_string(row.d) + "," + format_double(row.density) + "," +
           format_double(row.permgr_over_gropt) + "," +
           format_double(row.gropt_over_gr) + "\n";
  }
  output.csv = std::move(csv);
  return output;
}

// ---------------------------------------------------------------------------
// SVG rendering

namespace {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string svg_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string render_chart(std::vector<Series> series, bool log_x, bool log_y,
                         const std::string& x_label, const std::string& y_label) {
  constexpr double kWidth = 720, kHeight = 480;
  constexpr double kLeft = 80, kRight = 30, kTop = 30, kBottom = 60;
  const auto tx = [&](double x) { return log_x ? std::log10(x) : x; };
  const auto ty = [&](double y) { return log_y ? std::log10(y) : y; };

  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  bool first = true;
  for (Series& s : series) {
    std::erase_if(s.points, [&](const auto& point) {
      return (log_x && point.first <= 0.0) || (log_y && point.second <= 0.0);
    });
    for (const auto& [x, y] : s.points) {
      if (first) {
        x_min = x_max = tx(x);
        y_min = y_max = ty(y);
        first = false;
      }
      x_min = std::min(x_min, tx(x));
      x_max = std::max(x_max, tx(x));
      y_min = std::min(y_min, ty(y));
      y_max = std::max(y_max, ty(y));
    }
  }
  if (x_max - x_min < 1e-12) x_max = x_min + 1;
  if (y_max - y_min < 1e-12) y_max = y_min + 1;
  const auto px = [&](double x) {
    return kLeft + (tx(x) - x_min) / (x_max - x_min) * (kWidth - kLeft - kRight);
  };
  const auto py = [&](double y) {
    return kHeight - kBottom -
           (ty(y) - y_min) / (y_max - y_min) * (kHeight - kTop - kBottom);
  };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + svg_number(kLeft) + "\" y=\"" + svg_number(kTop) +
         "\" width=\"" + svg_number(kWidth - kLeft - kRight) + "\" height=\"" +
         svg_number(kHeight - kTop - kBottom) +
         "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int tick = 0; tick <= 4; ++tick) {
    const double fx = x_min + (x_max - x_min) * tick / 4.0;
    const double fy = y_min + (y_max - y_min) * tick / 4.0;
    const double vx = log_x ? std::pow(10.0, fx) : fx;
    const double vy = log_y ? std::pow(10.0, fy) : fy;
    const double sx = kLeft + (kWidth - kLeft - kRight) * tick / 4.0;
    const double sy = kHeight - kBottom - (kHeight - kTop - kBottom) * tick / 4.0;
    svg += "<text x=\"" + svg_number(sx) + "\" y=\"" +
           svg_number(kHeight - kBottom + 16) +
           "\" text-anchor=\"middle\">" + svg_number(vx) + "</text>\n";
    svg += "<text x=\"" + svg_number(kLeft - 6) + "\" y=\"" + svg_number(sy + 4) +
           "\" text-anchor=\"end\">" + svg_number(vy) + "</text>\n";
  }
  svg += "<text x=\"" + svg_number((kLeft + kWidth - kRight) / 2) + "\" y=\"" +
         svg_number(kHeight - 14) + "\" text-anchor=\"middle\">" + x_label +
         "</text>\n";
  svg += "<text x=\"16\" y=\"" + svg_number((kTop + kHeight - kBottom) / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         svg_number((kTop + kHeight - kBottom) / 2) + ")\">" + y_label +
         "</text>\n";

  for (size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    if (series[s].points.empty()) continue;
    std::string path;
    for (const auto& [x, y] : series[s].points) {
      path += (path.empty() ? "M" : " L") + svg_number(px(x)) + " " +
              svg_number(py(y));
      svg += "<circle cx=\"" + svg_number(px(x)) + "\" cy=\"" +
             svg_number(py(y)) + "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
    svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + svg_number(kWidth - kRight - 8) + "\" y=\"" +
           svg_number(kTop + 16 + 16 * static_cast<double>(s)) +
           "\" text-anchor=\"end\" fill=\"" + color + "\">" + series[s].label +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace

std::string render_scaling_svg(const std::vector<ExperimentRow>& rows) {
  // Mean Toffoli count per (pipeline, kind, n, d), plotted against whichever
  // of d and n actually varies.
  std::map<std::tuple<BenchPipeline, VectorKind, uint32_t, uint64_t>,
           std::pair<double, uint64_t>>
      means;
  std::map<uint32_t, bool> distinct_n;
  std::map<uint64_t, bool> distinct_d;
  for (const ExperimentRow& row : rows) {
    auto& [sum, count] = means[{row.pipeline, row.kind, row.n, row.d}];
    sum += static_cast<double>(row.counts.toffoli);
    ++count;
    distinct_n[row.n] = true;
    distinct_d[row.d] = true;
  }
  const bool vary_d = distinct_d.size() >= distinct_n.size();
  std::map<std::string, Series> grouped;
  for (const auto& [key, value] : means) {
    const auto& [pipeline, kind, n, d] = key;
    const std::string label =
        std::string(to_string(pipeline)) + " " + to_string(kind) +
        (vary_d ? (" n=" + std::to_string(n)) : (" d=" + std::to_string(d)));
    grouped[label].label = label;
    grouped[label].points.emplace_back(
        vary_d ? static_cast<double>(d) : static_cast<double>(n),
        value.first / static_cast<double>(value.second));
  }
  std::vector<Series> series;
  for (auto& [label, group] : grouped) series.push_back(std::move(group));
  return render_chart(std::move(series), true, true, vary_d ? "d" : "n",
                      "mean Toffoli count");
}

std::string render_ratio_svg(const std::vector<RatioRow>& rows) {
  std::map<std::string, Series> grouped;
  for (const RatioRow& row : rows) {
    const std::string base =
        std::string(to_string(row.kind)) + " n=" + std::to_string(row.n);
    const std::string first = "permgr/gr-opt " + base;
    grouped[first].label = first;
    grouped[first].points.emplace_back(row.density, row.permgr_over_gropt);
    const std::string second = "gr-opt/gr " + base;
    grouped[second].label = second;
    grouped[second].points.emplace_back(row.density, row.gropt_over_gr);
  }
  std::vector<Series> series;
  for (auto& [label, group] : grouped) series.push_back(std::move(group));
  return render_chart(std::move(series), true, false, "density d/N",
                      "Toffoli ratio");
}

}  // namespace sparseprep
