// SPDX-License-Identifier: Apache-2.0
//
// bdris: reciprocal BD-RIS scattering matrix design
// Copyright (C) 2026 The bdris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "bdris/config_io.hpp"
#include "bdris/experiment.hpp"
#include "bdris/format.hpp"
#include "bdris/matrix_io.hpp"
#include "bdris/optimizer.hpp"
#include "bdris/projection.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace bdris;

namespace {

struct SeedRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

// "a..b" (inclusive) or a single seed.
SeedRange parse_seed_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("bad seed range '" + text + "' (expected a..b)");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  SeedRange r{number(std::string_view(text).substr(0, dots)),
              number(std::string_view(text).substr(dots + 2))};
  if (r.last < r.first) throw std::invalid_argument("seed range '" + text + "' is empty");
  return r;
}

SystemConfig resolve(const ProblemConfig& problem, const std::optional<std::string>& arch) {
  if (arch) return problem.with_architecture(ArchitectureSpec::parse(*arch));
  return problem.system;
}

void print_feasibility(const FeasibilityReport& rep) {
  std::printf("architecture       %s (%zu blocks)\n", std::string(to_string(rep.architecture)).c_str(),
              rep.blocks.size());
  std::printf("max unitarity      %s  %s\n", format_double(rep.max_unitarity).c_str(),
              rep.unitary_ok ? "ok" : "VIOLATED");
  std::printf("max symmetry       %s  %s\n", format_double(rep.max_symmetry).c_str(),
              rep.symmetric_ok ? "ok" : "VIOLATED");
  if (rep.architecture == Architecture::SingleConnected) {
    std::printf("max |modulus - 1|  %s  %s\n", format_double(rep.max_modulus_error).c_str(),
                rep.modulus_ok ? "ok" : "VIOLATED");
  }
}

int cmd_optimize(const fs::path& config_path, std::uint64_t seed,
                 const std::optional<std::string>& arch,
                 const std::optional<fs::path>& trace_path,
                 const std::optional<fs::path>& matrix_path) {
  const ProblemConfig problem = load_problem_config(config_path);
  const SystemConfig config = resolve(problem, arch);
  config.validate();
  const ChannelSet channels = generate_channels(config, problem.geometry, seed);
  const Beamformer beam = design_beamformer(config, channels, seed);
  const CgaResult res = cga_optimize(channels, beam, config, seed);
  const OptimizerTrace& t = res.trace;

  std::printf("seed               %llu\n", static_cast<unsigned long long>(seed));
  std::printf("initial rate       %s\n", format_double(t.initial_rate).c_str());
  std::printf("final rate         %s\n", format_double(t.final_rate).c_str());
  std::printf("projected rate     %s\n", format_double(t.projected_rate).c_str());
  std::printf("iterations         %d (%s)\n", t.iters_used, std::string(to_string(t.reason)).c_str());
  print_feasibility(validate_feasibility(res.theta, 1e-8, 1e-6));

  if (trace_path) {
    std::ofstream out(*trace_path);
    if (!out) throw std::runtime_error("cannot write " + trace_path->string());
    write_trace_csv(out, t);
  }
  if (matrix_path) write_matrix_file(*matrix_path, res.theta);
  return 0;
}

int cmd_bench(const fs::path& spec_path, const std::optional<fs::path>& out_dir, int workers) {
  const ExperimentSpec spec = load_experiment_spec(spec_path);
  const fs::path dir = out_dir ? *out_dir : fs::path(spec.output_dir);
  const ExperimentResult result = run_experiment(spec, workers);
  const auto files = emit_outputs(spec, result.table, result.traces, dir);
  int failed = 0;
  for (const auto& r : result.table) {
    if (r.status != "ok") {
      ++failed;
      std::fprintf(stderr, "%s R/P=%s trial %d: %s\n", r.architecture.c_str(),
                   format_double(r.sweep_value).c_str(), r.trial, r.status.c_str());
    }
  }
  std::printf("%zu rows (%d skipped), %zu files written to %s\n", result.table.size(), failed,
              files.size(), dir.string().c_str());
  return 0;
}

int cmd_convergence(const fs::path& config_path, const std::string& seeds,
                    std::vector<std::string> archs, const fs::path& out_dir) {
  const ProblemConfig problem = load_problem_config(config_path);
  const SeedRange range = parse_seed_range(seeds);
  if (archs.empty()) {
    if (problem.architecture) archs.push_back(problem.architecture->label);
    else archs = {"sc", "gc2", "gc4", "fc"};
  }
  fs::create_directories(out_dir);
  std::ofstream summary(out_dir / "convergence.csv");
  if (!summary) throw std::runtime_error("cannot write " + (out_dir / "convergence.csv").string());
  summary << "architecture,seed,iters,converged,initial_rate,final_rate,projected_rate\n";
  for (const auto& label : archs) {
    const SystemConfig config = resolve(problem, label);
    config.validate();
    for (std::uint64_t seed = range.first;; ++seed) {
      const ChannelSet channels = generate_channels(config, problem.geometry, seed);
      const Beamformer beam = design_beamformer(config, channels, seed);
      const OptimizerTrace t = cga_optimize(channels, beam, config, seed).trace;
      const fs::path path = out_dir / ("trace_" + label + "_" + std::to_string(seed) + ".csv");
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path.string());
      write_trace_csv(out, t);
      summary << label << ',' << seed << ',' << t.iters_used << ','
              << (t.converged ? "true" : "false") << ',' << format_double(t.initial_rate) << ','
              << format_double(t.final_rate) << ',' << format_double(t.projected_rate) << '\n';
      if (seed == range.last) break;
    }
  }
  std::printf("traces written to %s\n", out_dir.string().c_str());
  return 0;
}

int cmd_validate(const fs::path& matrix_path, double tol_unitary, double tol_symmetry) {
  const MatrixFile file = read_matrix_file(matrix_path);
  const int r = static_cast<int>(file.dense.rows());
  const ScatteringMatrix theta = ScatteringMatrix::from_dense(file.dense, r / file.n_groups);
  const FeasibilityReport rep = validate_feasibility(theta, tol_unitary, tol_symmetry);
  print_feasibility(rep);
  const bool ok = rep.unitary_ok && rep.symmetric_ok &&
                  (rep.architecture != Architecture::SingleConnected || rep.modulus_ok);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattering-matrix design for beyond-diagonal reconfigurable surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bdris 0.1.0");

  fs::path config_path, spec_path, matrix_path;
  std::optional<std::string> arch;
  std::optional<fs::path> trace_path, out_matrix, bench_out;
  std::uint64_t seed = 0;
  auto* optimize = app.add_subcommand("optimize", "One optimization run");
  optimize->add_option("--config", config_path, "Problem config (JSON)")->required()->check(CLI::ExistingFile);
  optimize->add_option("--seed", seed, "Channel and start seed");
  optimize->add_option("--arch", arch, "sc, fc or gc<size>; overrides the config");
  optimize->add_option("--trace", trace_path, "Write the convergence trace CSV here");
  optimize->add_option("--save-matrix", out_matrix, "Write the projected matrix here");

  int workers = 1;
  auto* bench = app.add_subcommand("bench", "Monte Carlo experiment");
  bench->add_option("--spec", spec_path, "Experiment spec (JSON)")->required()->check(CLI::ExistingFile);
  bench->add_option("--out", bench_out, "Output directory (default: the spec's output_dir)");
  bench->add_option("--workers", workers, "Parallel jobs")->check(CLI::PositiveNumber);

  std::string seeds;
  std::vector<std::string> archs;
  fs::path conv_out;
  auto* convergence = app.add_subcommand("convergence", "Convergence traces over a seed range");
  convergence->add_option("--config", config_path, "Problem config (JSON)")->required()->check(CLI::ExistingFile);
  convergence->add_option("--seeds", seeds, "Seed range a..b (inclusive)")->required();
  convergence->add_option("--arch", archs, "Architectures (default: config's, else sc gc2 gc4 fc)");
  convergence->add_option("--out", conv_out, "Output directory")->required();

  double tol_unitary = 1e-8, tol_symmetry = 1e-6;
  auto* validate = app.add_subcommand("validate", "Feasibility report for a stored matrix");
  validate->add_option("--matrix", matrix_path, "Matrix file")->required()->check(CLI::ExistingFile);
  validate->add_option("--tol-unitary", tol_unitary, "Unitarity tolerance");
  validate->add_option("--tol-symmetry", tol_symmetry, "Symmetry tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*optimize) return cmd_optimize(config_path, seed, arch, trace_path, out_matrix);
    if (*bench) return cmd_bench(spec_path, bench_out, workers);
    if (*convergence) return cmd_convergence(config_path, seeds, archs, conv_out);
    if (*validate) return cmd_validate(matrix_path, tol_unitary, tol_symmetry);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
