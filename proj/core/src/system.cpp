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

#include "bdris/system.hpp"

#include <cmath>
#include <stdexcept>

namespace bdris {

EquivalentChannel equivalent_channel(const ScatteringMatrix& theta,
                                     const ChannelSet& channels) {
  const int r = theta.n_elements();
  const int rg = theta.group_size();
  if (channels.h_tx.rows() != r || channels.h_rx.cols() != r) {
    throw std::invalid_argument(
        "equivalent_channel: channel shapes do not match the surface size");
  }
  EquivalentChannel out;
  out.omega.resize(r, channels.h_tx.cols());
  for (int g = 0; g < theta.n_groups(); ++g) {
    out.omega.middleRows(g * rg, rg).noalias() =
        theta.block(g) * channels.h_tx.middleRows(g * rg, rg);
  }
  out.e.noalias() = channels.h_rx * out.omega;
  return out;
}

GroupSlice group_slice(const ChannelSet& channels, int group_size, int g) {
  const auto r = static_cast<int>(channels.h_tx.rows());
  if (group_size < 1 || r % group_size != 0) {
    throw std::invalid_argument("group_slice: group size must divide R");
  }
  if (g < 0 || g >= r / group_size) {
    throw std::out_of_range("group_slice: group index " + std::to_string(g) +
                            " out of range");
  }
  return {channels.h_rx.middleCols(g * group_size, group_size),
          channels.h_tx.middleRows(g * group_size, group_size)};
}

double sinr(const EquivalentChannel& eq, const Beamformer& beam,
            double noise_power, int k) {
  if (k < 0 || k >= eq.e.rows()) {
    throw std::out_of_range("sinr: user index out of range");
  }
  const Eigen::RowVectorXcd gains = eq.e.row(k) * beam.v;
  double interference = 0.0;
  for (Eigen::Index i = 0; i < gains.size(); ++i) {
    if (i != k) interference += std::norm(gains(i));
  }
  return std::norm(gains(k)) / (interference + noise_power);
}

RVector sinrs(const EquivalentChannel& eq, const Beamformer& beam,
              double noise_power) {
  const CMatrix gains = eq.e * beam.v;  // (k, i) = e_k v_i
  const auto k_users = gains.rows();
  RVector out(k_users);
  for (Eigen::Index k = 0; k < k_users; ++k) {
    double interference = 0.0;
    for (Eigen::Index i = 0; i < gains.cols(); ++i) {
      if (i != k) interference += std::norm(gains(k, i));
    }
    out(k) = std::norm(gains(k, k)) / (interference + noise_power);
  }
  return out;
}

double sum_rate(const EquivalentChannel& eq, const Beamformer& beam,
                double noise_power) {
  const RVector gamma = sinrs(eq, beam, noise_power);
  double rate = 0.0;
  for (Eigen::Index k = 0; k < gamma.size(); ++k) rate += std::log2(1.0 + gamma(k));
  return rate;
}

double sum_rate(const ScatteringMatrix& theta, const ChannelSet& channels,
                const Beamformer& beam, double noise_power) {
  return sum_rate(equivalent_channel(theta, channels), beam, noise_power);
}

Beamformer init_beamformer_uniform(const SystemConfig& config) {
  config.validate();
  Beamformer out;
  out.power_budget = config.p_max;
  out.v = CMatrix::Zero(config.n_tx, config.n_users);
  const double amplitude = std::sqrt(config.p_max / config.n_users);
  for (int k = 0; k < config.n_users; ++k) out.v(k, k) = amplitude;
  return out;
}

Beamformer init_beamformer_mmse(const EquivalentChannel& eq,
                                const SystemConfig& config) {
  config.validate();
  const auto k_users = eq.e.rows();
  const double reg = static_cast<double>(k_users) * config.noise_power / config.p_max;
  const CMatrix gram =
      eq.e * eq.e.adjoint() + reg * CMatrix::Identity(k_users, k_users);
  Beamformer out;
  out.power_budget = config.p_max;
  out.v = eq.e.adjoint() * gram.ldlt().solve(CMatrix::Identity(k_users, k_users));
  const double norm = out.v.norm();
  if (norm > 0.0) out.v *= std::sqrt(config.p_max) / norm;
  return out;
}

}  // namespace bdris
