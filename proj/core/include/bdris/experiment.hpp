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

#pragma once

#include "bdris/config_io.hpp"
#include "bdris/optimizer.hpp"
#include "bdris/scattering.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace bdris {

enum class SweepVariable { NElements, PMax };

/// Monte Carlo grid: trials x sweep values x architectures.
///
/// JSON schema:
///   { "config": {<problem config>}, "architectures": ["sc", "gc2", ...],
///     "sweep": {"variable": "n_elements" | "p_max", "values": [...]},
///     "n_trials": 100, "seed_base": 0, "output_dir": "out",
///     "save_traces": true }
/// Without "sweep" the single cell uses the config's own n_elements.
struct ExperimentSpec {
  ProblemConfig base;
  std::vector<ArchitectureSpec> architectures;
  SweepVariable variable = SweepVariable::NElements;
  std::vector<double> values;
  int n_trials = 1;
  std::uint64_t seed_base = 0;
  std::string output_dir = "out";
  bool save_traces = true;

  void validate() const;
};

ExperimentSpec parse_experiment_spec(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentSpec& spec);
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

std::string_view to_string(SweepVariable variable);

struct ResultRow {
  std::string architecture;
  double sweep_value = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  double sum_rate_bits = 0.0;
  int iters = 0;
  double wall_time_s = 0.0;
  bool converged = false;
  std::uint64_t channel_digest = 0;
  std::string status = "ok";  // otherwise the reason the cell was skipped
};

using ResultTable = std::vector<ResultRow>;

struct TraceEntry {
  std::string architecture;
  double sweep_value = 0.0;
  int trial = 0;
  OptimizerTrace trace;
};

struct ExperimentResult {
  ResultTable table;  // ordered by (trial, sweep value, architecture)
  std::vector<TraceEntry> traces;
};

/// Runs every (trial, sweep value, architecture) cell. Trial t uses channel
/// seed seed_base + t for every architecture, so all architectures in a
/// trial see the same channels and beamformer. Cells whose sweep value is
/// invalid for an architecture are reported with a non-ok status. Results do
/// not depend on the worker count.
ExperimentResult run_experiment(const ExperimentSpec& spec, int workers = 1);

/// Empirical CDF: sorted values paired with k/n. Throws on empty input.
std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> values);

/// Writes results.csv, cdf_<arch>.csv, one trace CSV per trace entry and
/// manifest.json (spec echo, seeds, timings, timestamp). Only the manifest
/// holds run-dependent data. Returns the written paths.
std::vector<std::filesystem::path> emit_outputs(
    const ExperimentSpec& spec, const ResultTable& table,
    const std::vector<TraceEntry>& traces, const std::filesystem::path& dir);

/// results.csv body for the table (header included).
std::string results_csv(const ResultTable& table);

}  // namespace bdris
