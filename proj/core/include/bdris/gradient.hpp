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
#include "bdris/fp.hpp"
#include "bdris/scattering.hpp"
#include "bdris/system.hpp"
#include "bdris/types.hpp"

#include <functional>
#include <vector>

namespace bdris {

/// Euclidean gradient of a real objective with respect to each diagonal
/// block. Convention: f(Theta + D) ~ f(Theta) + Re tr(G^H D), so each block
/// holds d f/d Re + i d f/d Im entrywise (steepest ascent).
struct BlockGradient {
  std::vector<CMatrix> grads;
};

/// Closed-form gradient of the penalized surrogate with fixed auxiliaries:
///   sum_k (1+tau_k)/ln2 [ 2 conj(conj(y_k) h_k (W v_k)^T)
///        - 2 |y_k|^2 sum_i conj(conj(e_k v_i) h_k (W v_i)^T) ]
///   - 4 nu (Theta_g - Theta_g^T)
/// where h_k and W are the group-g slices and e_k v_i is the full
/// (all-group) equivalent-channel gain.
BlockGradient euclidean_gradient(const ScatteringMatrix& theta,
                                 const FpState& fp, const ChannelSet& channels,
                                 const Beamformer& beam,
                                 const SystemConfig& config);

/// Same gradient for V = diag(sqrt(p_1), ..., sqrt(p_K)) with per-user
/// powers p_k. Requires K = N; throws std::invalid_argument otherwise.
BlockGradient euclidean_gradient_diagonal_beam(const ScatteringMatrix& theta,
                                               const FpState& fp,
                                               const ChannelSet& channels,
                                               const RVector& power_alloc,
                                               const SystemConfig& config);

using BlockObjective = std::function<double(const ScatteringMatrix&)>;

/// Central differences over the 2 * G * R_G^2 real coordinates of the
/// blocks, assembled with the same convention as euclidean_gradient.
BlockGradient finite_difference_gradient(const BlockObjective& objective,
                                         const ScatteringMatrix& theta,
                                         double step);

/// Finite differences of penalized_objective.
BlockGradient finite_difference_gradient(const ScatteringMatrix& theta,
                                         const FpState& fp,
                                         const ChannelSet& channels,
                                         const Beamformer& beam,
                                         const SystemConfig& config,
                                         double step);

/// max_entry |a - b| / max_entry |b|; zero when both vanish.
double max_relative_error(const BlockGradient& a, const BlockGradient& b);

}  // namespace bdris
