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

#include "bdris/fp.hpp"
#include "bdris/gradient.hpp"
#include "bdris/manifold.hpp"
#include "bdris/optimizer.hpp"
#include "bdris/projection.hpp"

#include <benchmark/benchmark.h>

using namespace bdris;

namespace {

struct Setup {
  SystemConfig config;
  ChannelSet channels;
  Beamformer beam;
  ScatteringMatrix theta;
  FpState fp;
};

// K = N = 4, R and group size from the benchmark arguments.
Setup make_setup(int r, int group_size) {
  SystemConfig c;
  c.n_elements = r;
  c.n_groups = r / group_size;
  ChannelSet channels = generate_channels(c, Geometry{}, 1);
  Beamformer beam = init_beamformer_uniform(c);
  ScatteringMatrix theta = random_feasible(c, 1);
  FpState fp = refresh_fp(equivalent_channel(theta, channels), beam, c.noise_power);
  return {c, std::move(channels), std::move(beam), std::move(theta), std::move(fp)};
}

void group_args(benchmark::internal::Benchmark* b) {
  for (int r : {8, 16, 32}) {
    for (int gs : {1, 4, r}) b->Args({r, gs});
  }
}

void BM_Gradient(benchmark::State& state) {
  const Setup s = make_setup(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(euclidean_gradient(s.theta, s.fp, s.channels, s.beam, s.config));
  }
}
BENCHMARK(BM_Gradient)->Apply(group_args);

void BM_TangentAndRetract(benchmark::State& state) {
  const Setup s = make_setup(state.range(0), state.range(1));
  const BlockGradient g = euclidean_gradient(s.theta, s.fp, s.channels, s.beam, s.config);
  for (auto _ : state) {
    const TangentVector xi = tangent_project(g, s.theta);
    benchmark::DoNotOptimize(retract(s.theta, xi, 1e-3));
  }
}
BENCHMARK(BM_TangentAndRetract)->Apply(group_args);

void BM_Projection(benchmark::State& state) {
  const Setup s = make_setup(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(project_symmetric_unitary(s.theta));
}
BENCHMARK(BM_Projection)->Apply(group_args);

// Whole runs capped at 100 iterations, so time per run ~ 100 x iteration cost.
void BM_Cga100(benchmark::State& state) {
  Setup s = make_setup(state.range(0), state.range(1));
  s.config.solver.max_iters = 100;
  s.config.solver.tolerance = 1e-300;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cga_optimize(s.channels, s.beam, s.config, 1));
  }
}
BENCHMARK(BM_Cga100)->Apply(group_args)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
