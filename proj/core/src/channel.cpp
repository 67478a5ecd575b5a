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

#include "bdris/channel.hpp"

#include "bdris/rng.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

namespace bdris {

void SystemConfig::validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("invalid SystemConfig: " + what);
  };
  if (n_tx < 1 || n_users < 1 || n_elements < 1 || n_groups < 1) {
    fail("all dimensions must be >= 1");
  }
  if (n_users > n_tx) fail("n_users must not exceed n_tx");
  if (n_elements % n_groups != 0) {
    fail("n_elements (" + std::to_string(n_elements) +
         ") is not divisible by n_groups (" + std::to_string(n_groups) + ")");
  }
  if (!(p_max > 0.0)) fail("p_max must be positive");
  if (!(noise_power > 0.0)) fail("noise_power must be positive");
  if (!(solver.nu >= 0.0)) fail("nu must be non-negative");
  if (!(solver.tolerance > 0.0)) fail("epsilon must be positive");
  if (solver.max_iters < 0) fail("max_iters must be non-negative");
  if (solver.restarts < 1) fail("restarts must be >= 1");
  if (solver.armijo_max_steps < 1) fail("armijo_max_steps must be >= 1");
  if (!(solver.armijo_coeff >= 0.0)) fail("armijo_coeff must be non-negative");
  if (!(solver.step_init > 0.0)) fail("step_init must be positive");
  if (!(solver.step_contract > 0.0 && solver.step_contract < 1.0)) {
    fail("step_contract must lie in (0, 1)");
  }
}

double pathloss(double distance_m, double exponent, double ref_loss_db,
                double ref_distance_m) {
  if (!(distance_m > 0.0)) {
    throw std::domain_error("pathloss: distance must be positive");
  }
  if (!(ref_distance_m > 0.0)) {
    throw std::domain_error("pathloss: reference distance must be positive");
  }
  return std::pow(10.0, -ref_loss_db / 10.0) *
         std::pow(distance_m / ref_distance_m, -exponent);
}

double pathloss(const LinkGeometry& link) {
  return pathloss(link.distance_m, link.exponent, link.ref_loss_db,
                  link.ref_distance_m);
}

ChannelSet generate_channels_with_gains(const SystemConfig& config,
                                        double gain_tx, double gain_rx,
                                        std::uint64_t seed) {
  config.validate();
  if (gain_tx < 0.0 || gain_rx < 0.0) {
    throw std::invalid_argument("link gains must be non-negative");
  }
  Rng rng(seed);
  ChannelSet out;
  out.seed = seed;
  out.h_tx = rng.complex_normal_matrix(config.n_elements, config.n_tx, gain_tx);
  out.h_rx =
      rng.complex_normal_matrix(config.n_users, config.n_elements, gain_rx);
  return out;
}

ChannelSet generate_channels(const SystemConfig& config,
                             const Geometry& geometry, std::uint64_t seed) {
  return generate_channels_with_gains(config, pathloss(geometry.bs_ris),
                                      pathloss(geometry.ris_users), seed);
}

namespace {

void fnv1a(std::uint64_t& hash, const void* data, std::size_t bytes) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < bytes; ++i) {
    hash ^= p[i];
    hash *= 0x100000001b3ULL;
  }
}

void hash_matrix(std::uint64_t& hash, const CMatrix& m) {
  const std::int64_t dims[2] = {m.rows(), m.cols()};
  fnv1a(hash, dims, sizeof(dims));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double parts[2] = {m(i, j).real(), m(i, j).imag()};
      fnv1a(hash, parts, sizeof(parts));
    }
  }
}

}  // namespace

std::uint64_t channel_digest(const ChannelSet& channels) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  hash_matrix(hash, channels.h_tx);
  hash_matrix(hash, channels.h_rx);
  return hash;
}

}  // namespace bdris
