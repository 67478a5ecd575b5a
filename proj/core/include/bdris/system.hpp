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
#include "bdris/scattering.hpp"
#include "bdris/types.hpp"

namespace bdris {

/// Transmit precoder V (N x K), columns v_k, with its power budget.
struct Beamformer {
  CMatrix v;
  double power_budget = 0.0;

  double power() const { return v.squaredNorm(); }
};

/// Omega = Theta H_TX and E = H_RX Omega; row k of E is e_k.
struct EquivalentChannel {
  CMatrix omega;  // R x N
  CMatrix e;      // K x N
};

/// Rows/columns of the channels seen by group g (0-based).
struct GroupSlice {
  CMatrix h;  // K x R_G, row k is h_k^(g)T
  CMatrix w;  // R_G x N, W^(g)
};

EquivalentChannel equivalent_channel(const ScatteringMatrix& theta,
                                     const ChannelSet& channels);

/// Throws std::out_of_range for g outside [0, G).
GroupSlice group_slice(const ChannelSet& channels, int group_size, int g);

/// gamma_k = |e_k v_k|^2 / (sum_{i != k} |e_k v_i|^2 + N_0).
double sinr(const EquivalentChannel& eq, const Beamformer& beam,
            double noise_power, int k);

RVector sinrs(const EquivalentChannel& eq, const Beamformer& beam,
              double noise_power);

/// sum_k log2(1 + gamma_k), bits/s/Hz.
double sum_rate(const EquivalentChannel& eq, const Beamformer& beam,
                double noise_power);

double sum_rate(const ScatteringMatrix& theta, const ChannelSet& channels,
                const Beamformer& beam, double noise_power);

/// Equal power P_max/K per user on the first K diagonal positions of N x K.
Beamformer init_beamformer_uniform(const SystemConfig& config);

/// Regularized channel inverse E^H (E E^H + (K N_0 / P_max) I)^-1 scaled to
/// full power. An initialization heuristic only; V is held fixed afterwards.
Beamformer init_beamformer_mmse(const EquivalentChannel& eq,
                                const SystemConfig& config);

}  // namespace bdris
