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

#include "bdris/experiment.hpp"

#include "bdris/channel.hpp"
#include "bdris/format.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#ifndef BDRIS_VERSION
#define BDRIS_VERSION "unknown"
#endif

namespace bdris {

using nlohmann::json;

std::string_view to_string(SweepVariable variable) {
  return variable == SweepVariable::NElements ? "n_elements" : "p_max";
}

void ExperimentSpec::validate() const {
  if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");
  if (architectures.empty()) {
    throw std::invalid_argument("at least one architecture is required");
  }
  for (double v : values) {
    if (variable == SweepVariable::NElements) {
      if (v < 1.0 || v != std::floor(v)) {
        throw std::invalid_argument("n_elements sweep values must be positive integers");
      }
    } else if (!(v > 0.0)) {
      throw std::invalid_argument("p_max sweep values must be positive");
    }
  }
}

ExperimentSpec parse_experiment_spec(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("experiment spec must be an object");
  for (const auto& [key, value] : j.items()) {
    static const char* known[] = {"config",   "architectures", "sweep",
                                  "n_trials", "seed_base",     "output_dir",
                                  "save_traces"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw std::invalid_argument("unknown key '" + key + "' in experiment spec");
    }
  }
  ExperimentSpec spec;
  if (j.contains("config")) spec.base = parse_problem_config(j.at("config"));
  if (j.contains("architectures")) {
    for (const auto& a : j.at("architectures")) {
      spec.architectures.push_back(ArchitectureSpec::parse(a.get<std::string>()));
    }
  } else {
    spec.architectures.push_back(spec.base.architecture.value_or(ArchitectureSpec{"sc", 1}));
  }
  if (j.contains("sweep")) {
    const json& sweep = j.at("sweep");
    const auto variable = sweep.at("variable").get<std::string>();
    if (variable == "n_elements") spec.variable = SweepVariable::NElements;
    else if (variable == "p_max") spec.variable = SweepVariable::PMax;
    else throw std::invalid_argument("sweep variable must be 'n_elements' or 'p_max'");
    spec.values = sweep.at("values").get<std::vector<double>>();
  }
  if (j.contains("n_trials")) spec.n_trials = j.at("n_trials").get<int>();
  if (j.contains("seed_base")) spec.seed_base = j.at("seed_base").get<std::uint64_t>();
  if (j.contains("output_dir")) spec.output_dir = j.at("output_dir").get<std::string>();
  if (j.contains("save_traces")) spec.save_traces = j.at("save_traces").get<bool>();
  spec.validate();
  return spec;
}

json to_json(const ExperimentSpec& spec) {
  json archs = json::array();
  for (const auto& a : spec.architectures) archs.push_back(a.label);
  return {{"config", to_json(spec.base)},
          {"architectures", archs},
          {"sweep", {{"variable", to_string(spec.variable)}, {"values", spec.values}}},
          {"n_trials", spec.n_trials},
          {"seed_base", spec.seed_base},
          {"output_dir", spec.output_dir},
          {"save_traces", spec.save_traces}};
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  try {
    return parse_experiment_spec(j);
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

namespace {

struct Job {
  int trial;
  std::size_t value_index;
  std::size_t arch_index;
};

std::vector<double> sweep_values(const ExperimentSpec& spec) {
  if (!spec.values.empty()) return spec.values;
  return {spec.variable == SweepVariable::NElements
              ? static_cast<double>(spec.base.system.n_elements)
              : spec.base.system.p_max};
}

std::string sanitize(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

std::string hex64(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(value));
  return buffer;
}

void run_job(const ExperimentSpec& spec, double value, const ArchitectureSpec& arch,
             int trial, ResultRow& row, std::optional<TraceEntry>& trace) {
  row.architecture = arch.label;
  row.sweep_value = value;
  row.trial = trial;
  row.seed = spec.seed_base + static_cast<std::uint64_t>(trial);
  row.sum_rate_bits = std::numeric_limits<double>::quiet_NaN();
  try {
    SystemConfig config = spec.base.system;
    if (spec.variable == SweepVariable::NElements) {
      config.n_elements = static_cast<int>(value);
    } else {
      config.p_max = value;
    }
    config.n_groups = config.n_elements / arch.resolve_group_size(config.n_elements);
    config.validate();

    const ChannelSet channels = generate_channels(config, spec.base.geometry, row.seed);
    row.channel_digest = channel_digest(channels);
    const Beamformer beam = design_beamformer(config, channels, row.seed);

    const auto start = std::chrono::steady_clock::now();
    CgaResult result = cga_optimize(channels, beam, config, row.seed);
    row.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    row.sum_rate_bits = result.trace.projected_rate;
    row.iters = result.trace.iters_used;
    row.converged = result.trace.converged;
    row.status = "ok";
    if (spec.save_traces) {
      trace = TraceEntry{arch.label, value, trial, std::move(result.trace)};
    }
  } catch (const std::exception& e) {
    row.status = "error: " + sanitize(e.what());
  }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec, int workers) {
  spec.validate();
  const std::vector<double> values = sweep_values(spec);

  std::vector<Job> jobs;
  for (int t = 0; t < spec.n_trials; ++t) {
    for (std::size_t v = 0; v < values.size(); ++v) {
      for (std::size_t a = 0; a < spec.architectures.size(); ++a) {
        jobs.push_back({t, v, a});
      }
    }
  }

  ResultTable rows(jobs.size());
  std::vector<std::optional<TraceEntry>> traces(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      run_job(spec, values[job.value_index], spec.architectures[job.arch_index],
              job.trial, rows[i], traces[i]);
    }
  };

  const int n_workers = std::clamp(workers, 1, static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }

  ExperimentResult out;
  out.table = std::move(rows);
  for (auto& t : traces) {
    if (t) out.traces.push_back(std::move(*t));
  }
  return out;
}

std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("empirical_cdf: empty input");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  std::vector<std::pair<double, double>> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.emplace_back(values[i], static_cast<double>(i + 1) / n);
  }
  return out;
}

std::string results_csv(const ResultTable& table) {
  std::ostringstream os;
  os << "architecture,sweep_value,trial,seed,sum_rate_bits,iters,converged,"
        "channel_digest,status\n";
  for (const auto& r : table) {
    os << r.architecture << ',' << format_double(r.sweep_value) << ',' << r.trial
       << ',' << r.seed << ',' << format_double(r.sum_rate_bits) << ',' << r.iters
       << ',' << (r.converged ? 1 : 0) << ',' << hex64(r.channel_digest) << ','
       << sanitize(r.status) << '\n';
  }
  return os.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

}  // namespace

std::vector<std::filesystem::path> emit_outputs(const ExperimentSpec& spec,
                                                const ResultTable& table,
                                                const std::vector<TraceEntry>& traces,
                                                const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  write_file(dir / "results.csv", results_csv(table));
  written.push_back(dir / "results.csv");

  // cdf_<arch>.csv, one CDF per sweep value, in order of appearance.
  std::vector<std::string> arch_order;
  std::map<std::string, std::vector<std::pair<double, std::vector<double>>>> groups;
  for (const auto& r : table) {
    if (r.status != "ok") continue;
    auto [it, inserted] = groups.try_emplace(r.architecture);
    if (inserted) arch_order.push_back(r.architecture);
    auto& per_value = it->second;
    auto cell = std::find_if(per_value.begin(), per_value.end(),
                             [&](const auto& p) { return p.first == r.sweep_value; });
    if (cell == per_value.end()) {
      per_value.emplace_back(r.sweep_value, std::vector<double>{});
      cell = std::prev(per_value.end());
    }
    cell->second.push_back(r.sum_rate_bits);
  }
  for (const auto& arch : arch_order) {
    std::ostringstream os;
    os << "sweep_value,sum_rate_bits,probability\n";
    for (const auto& [value, rates] : groups.at(arch)) {
      for (const auto& [rate, prob] : empirical_cdf(rates)) {
        os << format_double(value) << ',' << format_double(rate) << ','
           << format_double(prob) << '\n';
      }
    }
    const auto path = dir / ("cdf_" + arch + ".csv");
    write_file(path, os.str());
    written.push_back(path);
  }

  const bool single_value = spec.values.size() <= 1;
  for (const auto& entry : traces) {
    std::string name = "trace_" + entry.architecture + "_";
    if (!single_value) name += format_double(entry.sweep_value) + "_";
    name += std::to_string(entry.trial) + ".csv";
    std::ostringstream os;
    write_trace_csv(os, entry.trace);
    write_file(dir / name, os.str());
    written.push_back(dir / name);
  }

  json timing = json::array();
  std::vector<std::uint64_t> seeds;
  for (const auto& r : table) {
    timing.push_back({{"architecture", r.architecture},
                      {"sweep_value", r.sweep_value},
                      {"trial", r.trial},
                      {"wall_time_s", r.wall_time_s}});
    if (std::find(seeds.begin(), seeds.end(), r.seed) == seeds.end()) seeds.push_back(r.seed);
  }
  json files = json::array();
  for (const auto& p : written) files.push_back(p.filename().string());
  const json manifest = {{"tool", "bdris"},
                         {"version", BDRIS_VERSION},
                         {"eigen_version", std::to_string(EIGEN_WORLD_VERSION) + "." +
                                               std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                               std::to_string(EIGEN_MINOR_VERSION)},
                         {"created_utc", utc_timestamp()},
                         {"spec", to_json(spec)},
                         {"channel_seeds", seeds},
                         {"timing", timing},
                         {"files", files}};
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  written.push_back(dir / "manifest.json");
  return written;
}

}  // namespace bdris
