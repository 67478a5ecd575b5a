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
#include "bdris/system.hpp"
#include "bdris/types.hpp"

namespace bdris {

/// Auxiliary variables of the fractional-programming surrogate.
///
/// tau holds the Lagrangian-dual multipliers. They are kept real: at the
/// optimum each one equals a (non-negative) SINR. y holds the
/// quadratic-transform auxiliaries.
struct FpState {
  RVector tau;
  CVector y;
};

/// tau_k = gamma_k.
RVector update_tau(const EquivalentChannel& eq, const Beamformer& beam,
                   double noise_power);

/// y_k = e_k v_k / (sum_i |e_k v_i|^2 + N_0). The sum includes i = k.
CVector update_y(const EquivalentChannel& eq, const Beamformer& beam,
                 double noise_power);

/// Both auxiliaries at their closed-form optimum for the current channel.
FpState refresh_fp(const EquivalentChannel& eq, const Beamformer& beam,
                   double noise_power);

/// Per-user surrogate
///   log2(1+tau) - tau/ln2
///     + (1+tau)/ln2 * [2 Re{conj(y) e_k v_k} - |y|^2 (sum_i |e_k v_i|^2 + N_0)].
/// Tight (equal to log2(1 + gamma_k)) at the closed-form auxiliaries and a
/// lower bound on the rate for every other choice with tau >= 0.
double surrogate_rate(int k, const FpState& fp, const EquivalentChannel& eq,
                      const Beamformer& beam, double noise_power);

double surrogate_sum(const FpState& fp, const EquivalentChannel& eq,
                     const Beamformer& beam, double noise_power);

/// ||Theta - Theta^T||_F^2, accumulated over the diagonal blocks.
double penalty(const ScatteringMatrix& theta);

/// sum_k surrogate_rate - nu * penalty, with E recomputed from theta.
double penalized_objective(const ScatteringMatrix& theta, const FpState& fp,
                           const ChannelSet& channels, const Beamformer& beam,
                           const SystemConfig& config);

}  // namespace bdris
