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

#include "bdris/channel.hpp"
#include "bdris/manifold.hpp"
#include "bdris/rng.hpp"
#include "bdris/scattering.hpp"
#include "bdris/system.hpp"
#include "bdris/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace bdris::testing {

// Unit-variance channels: rates stay in a comfortable range with noise 1.
inline SystemConfig small_config(int n, int k, int r, int group_size) {
  SystemConfig c;
  c.n_tx = n;
  c.n_users = k;
  c.n_elements = r;
  c.n_groups = r / group_size;
  c.p_max = 1.0;
  c.noise_power = 0.1;
  return c;
}

inline ChannelSet unit_channels(const SystemConfig& c, std::uint64_t seed) {
  return generate_channels_with_gains(c, 1.0, 1.0, seed);
}

inline CMatrix random_matrix(Rng& rng, int rows, int cols) {
  return rng.complex_normal_matrix(rows, cols, 1.0);
}

inline Beamformer random_beamformer(Rng& rng, const SystemConfig& c) {
  Beamformer b;
  b.v = rng.complex_normal_matrix(c.n_tx, c.n_users, 1.0);
  b.v *= std::sqrt(c.p_max) / b.v.norm();
  b.power_budget = c.p_max;
  return b;
}

// Block-diagonal matrix with arbitrary (non-unitary, asymmetric) blocks.
inline ScatteringMatrix random_blocks(Rng& rng, int n_elements, int group_size) {
  std::vector<CMatrix> blocks;
  for (int g = 0; g < n_elements / group_size; ++g) {
    blocks.push_back(random_matrix(rng, group_size, group_size));
  }
  return ScatteringMatrix(std::move(blocks));
}

// Haar-like unitary blocks that are generally not symmetric.
inline ScatteringMatrix random_unitary(Rng& rng, int n_elements, int group_size) {
  std::vector<CMatrix> blocks;
  for (int g = 0; g < n_elements / group_size; ++g) {
    blocks.push_back(positive_diagonal_qr(random_matrix(rng, group_size, group_size)));
  }
  return ScatteringMatrix(std::move(blocks));
}

inline TangentVector random_ambient(Rng& rng, const ScatteringMatrix& theta) {
  TangentVector t;
  for (const auto& b : theta.blocks()) {
    t.blocks.push_back(random_matrix(rng, static_cast<int>(b.rows()),
                                     static_cast<int>(b.cols())));
  }
  return t;
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::min(hi, lo + static_cast<int>(rng.uniform() * (hi - lo + 1)));
}

}  // namespace bdris::testing
