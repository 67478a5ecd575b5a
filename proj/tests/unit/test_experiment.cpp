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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace bdris {
namespace {

using nlohmann::json;

ExperimentSpec tiny_spec(std::vector<std::string> archs, int trials) {
  ExperimentSpec spec;
  spec.base.system.n_tx = 2;
  spec.base.system.n_users = 2;
  spec.base.system.n_elements = 4;
  spec.base.system.n_groups = 4;
  spec.base.system.solver.max_iters = 60;
  for (const auto& a : archs) spec.architectures.push_back(ArchitectureSpec::parse(a));
  spec.n_trials = trials;
  spec.seed_base = 100;
  return spec;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("bdris_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

TEST(EmpiricalCdf, Examples) {
  const auto one = empirical_cdf({5.0});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], std::make_pair(5.0, 1.0));
  const auto four = empirical_cdf({3.0, 1.0, 4.0, 2.0});
  const std::vector<double> probs{0.25, 0.5, 0.75, 1.0};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(four[i].first, i + 1.0);
    EXPECT_EQ(four[i].second, probs[i]);
  }
  EXPECT_THROW(empirical_cdf({}), std::invalid_argument);
}

TEST(EmpiricalCdf, MonotoneAndNormalised) {
  std::vector<double> values;
  double x = 0.3;
  for (int i = 0; i < 500; ++i) values.push_back(x = std::fmod(x * 7919.13 + 0.77, 13.0));
  const auto cdf = empirical_cdf(values);
  for (std::size_t i = 1; i < cdf.size(); ++i) {
    EXPECT_LE(cdf[i - 1].first, cdf[i].first);
    EXPECT_LT(cdf[i - 1].second, cdf[i].second);
  }
  EXPECT_EQ(cdf.back().second, 1.0);
}

TEST(RunExperiment, OneTrialOneArchitectureGivesOneRow) {
  const auto result = run_experiment(tiny_spec({"sc"}, 1));
  ASSERT_EQ(result.table.size(), 1u);
  const ResultRow& r = result.table[0];
  EXPECT_EQ(r.architecture, "sc");
  EXPECT_EQ(r.seed, 100u);
  EXPECT_EQ(r.status, "ok");
  EXPECT_EQ(r.sweep_value, 4.0);
  EXPECT_GT(r.sum_rate_bits, 0.0);
  EXPECT_EQ(result.traces.size(), 1u);
}

TEST(RunExperiment, ArchitecturesShareChannels) {
  const auto result = run_experiment(tiny_spec({"sc", "gc2", "fc"}, 3));
  ASSERT_EQ(result.table.size(), 9u);
  for (int t = 0; t < 3; ++t) {
    const auto& first = result.table[3 * t];
    for (int a = 0; a < 3; ++a) {
      const auto& r = result.table[3 * t + a];
      EXPECT_EQ(r.trial, t);
      EXPECT_EQ(r.seed, 100u + t);
      EXPECT_EQ(r.channel_digest, first.channel_digest);
    }
  }
  EXPECT_NE(result.table[0].channel_digest, result.table[3].channel_digest);
}

TEST(RunExperiment, InvalidCellsAreReportedNotFatal) {
  ExperimentSpec spec = tiny_spec({"sc", "gc4"}, 1);
  spec.values = {4.0, 6.0};
  const auto result = run_experiment(spec);
  ASSERT_EQ(result.table.size(), 4u);
  int errors = 0;
  for (const auto& r : result.table) {
    if (r.architecture == "gc4" && r.sweep_value == 6.0) {
      EXPECT_EQ(r.status.rfind("error: ", 0), 0u);
      EXPECT_TRUE(std::isnan(r.sum_rate_bits));
      ++errors;
    } else {
      EXPECT_EQ(r.status, "ok");
    }
  }
  EXPECT_EQ(errors, 1);
  EXPECT_EQ(results_csv(result.table).find(",error: ") != std::string::npos, true);
}

TEST(RunExperiment, PowerSweepChangesRates) {
  ExperimentSpec spec = tiny_spec({"sc"}, 1);
  spec.variable = SweepVariable::PMax;
  spec.base.system.noise_power = 1e-10;
  spec.values = {0.01, 100.0};
  const auto result = run_experiment(spec);
  ASSERT_EQ(result.table.size(), 2u);
  EXPECT_LT(result.table[0].sum_rate_bits, result.table[1].sum_rate_bits);
}

TEST(RunExperiment, IndependentOfWorkerCount) {
  const auto spec = tiny_spec({"sc", "gc2", "fc"}, 4);
  EXPECT_EQ(results_csv(run_experiment(spec, 1).table),
            results_csv(run_experiment(spec, 3).table));
}

TEST(EmitOutputs, FileSet) {
  ExperimentSpec spec = tiny_spec({"sc", "fc"}, 2);
  const auto result = run_experiment(spec);
  const auto dir = scratch("emit");
  const auto files = emit_outputs(spec, result.table, result.traces, dir);
  for (const char* name : {"results.csv", "cdf_sc.csv", "cdf_fc.csv", "trace_sc_0.csv",
                           "trace_sc_1.csv", "trace_fc_0.csv", "trace_fc_1.csv",
                           "manifest.json"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / name)) << name;
  }
  EXPECT_EQ(files.size(), 8u);
  const json manifest = json::parse(slurp(dir / "manifest.json"));
  EXPECT_EQ(manifest.at("channel_seeds"), json({100, 101}));
  EXPECT_EQ(manifest.at("timing").size(), 4u);
  EXPECT_EQ(manifest.at("spec").at("n_trials"), 2);
  EXPECT_TRUE(manifest.contains("created_utc"));
  const std::string csv = slurp(dir / "results.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "architecture,sweep_value,trial,seed,sum_rate_bits,iters,converged,"
            "channel_digest,status");
  const std::string cdf = slurp(dir / "cdf_sc.csv");
  EXPECT_EQ(cdf.substr(0, cdf.find('\n')), "sweep_value,sum_rate_bits,probability");
  std::filesystem::remove_all(dir);
}

TEST(EmitOutputs, NoTracesGivesResultsCdfAndManifest) {
  ExperimentSpec spec = tiny_spec({"sc"}, 1);
  spec.save_traces = false;
  const auto result = run_experiment(spec);
  EXPECT_TRUE(result.traces.empty());
  const auto dir = scratch("emit_none");
  const auto files = emit_outputs(spec, result.table, result.traces, dir);
  EXPECT_EQ(files.size(), 3u);
  std::filesystem::remove_all(dir);
}

TEST(EmitOutputs, SweepTraceNamesIncludeValue) {
  ExperimentSpec spec = tiny_spec({"sc"}, 1);
  spec.values = {2.0, 4.0};
  const auto result = run_experiment(spec);
  const auto dir = scratch("emit_sweep");
  emit_outputs(spec, result.table, result.traces, dir);
  EXPECT_TRUE(std::filesystem::exists(dir / "trace_sc_2_0.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "trace_sc_4_0.csv"));
  std::filesystem::remove_all(dir);
}

TEST(EmitOutputs, RerunIsByteIdentical) {
  const auto spec = tiny_spec({"sc", "gc2"}, 2);
  const auto a = scratch("rerun_a");
  const auto b = scratch("rerun_b");
  const auto ra = run_experiment(spec);
  const auto rb = run_experiment(spec, 2);
  emit_outputs(spec, ra.table, ra.traces, a);
  emit_outputs(spec, rb.table, rb.traces, b);
  for (const char* name : {"results.csv", "cdf_sc.csv", "cdf_gc2.csv", "trace_gc2_1.csv"}) {
    EXPECT_EQ(slurp(a / name), slurp(b / name)) << name;
  }
  std::filesystem::remove_all(a);
  std::filesystem::remove_all(b);
}

TEST(ExperimentSpec, ParseAndValidate) {
  const json j = json::parse(R"({
    "config": {"n_tx": 2, "n_users": 2, "n_elements": 4},
    "architectures": ["sc", "fc"],
    "sweep": {"variable": "p_max", "values": [0.1, 1.0]},
    "n_trials": 3, "seed_base": 7, "output_dir": "x", "save_traces": false})");
  const ExperimentSpec spec = parse_experiment_spec(j);
  EXPECT_EQ(spec.architectures.size(), 2u);
  EXPECT_EQ(spec.variable, SweepVariable::PMax);
  EXPECT_EQ(spec.values, (std::vector<double>{0.1, 1.0}));
  EXPECT_EQ(spec.n_trials, 3);
  EXPECT_EQ(spec.seed_base, 7u);
  EXPECT_FALSE(spec.save_traces);
  EXPECT_EQ(parse_experiment_spec(to_json(spec)).values, spec.values);

  auto bad = [](const char* text) {
    EXPECT_THROW(parse_experiment_spec(json::parse(text)), std::invalid_argument) << text;
  };
  bad(R"({"n_trials": 0})");
  bad(R"({"architectures": []})");
  bad(R"({"architectures": ["gcx"]})");
  bad(R"({"sweep": {"variable": "snr", "values": [1]}})");
  bad(R"({"sweep": {"variable": "n_elements", "values": [2.5]}})");
  bad(R"({"sweep": {"variable": "p_max", "values": [0]}})");
  bad(R"({"trials": 3})");
}

TEST(ExperimentSpec, DefaultsToConfigArchitecture) {
  const auto spec = parse_experiment_spec(json::parse(R"({"config": {"architecture": "gc2"}})"));
  ASSERT_EQ(spec.architectures.size(), 1u);
  EXPECT_EQ(spec.architectures[0].label, "gc2");
}

}  // namespace
}  // namespace bdris
