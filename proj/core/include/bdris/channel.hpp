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

#include "bdris/types.hpp"

#include <cstdint>

namespace bdris {

/// Log-distance pathloss parameters for one link.
struct LinkGeometry {
  double distance_m = 1.0;
  double exponent = 2.0;
  double ref_loss_db = 30.0;
  double ref_distance_m = 1.0;
};

/// Deployment geometry. Defaults are a desk-scale indoor setting, not a
/// calibrated deployment.
struct Geometry {
  LinkGeometry bs_ris{50.0, 2.2, 30.0, 1.0};
  LinkGeometry ris_users{2.5, 2.8, 30.0, 1.0};
};

/// One channel realization.
struct ChannelSet {
  CMatrix h_tx;  // R x N, BS -> surface
  CMatrix h_rx;  // K x R, surface -> users; row k is h_k^T
  std::uint64_t seed = 0;
};

/// 10^(-ref_loss_db/10) * (distance / ref_distance)^(-exponent).
/// Throws std::domain_error for non-positive distances.
double pathloss(double distance_m, double exponent, double ref_loss_db,
                double ref_distance_m = 1.0);

double pathloss(const LinkGeometry& link);

/// Rayleigh fading: i.i.d. CN(0, gain) entries on each link. Draws H_TX
/// first, then H_RX, both row-major, from Rng(seed).
ChannelSet generate_channels(const SystemConfig& config,
                             const Geometry& geometry, std::uint64_t seed);

ChannelSet generate_channels_with_gains(const SystemConfig& config,
                                        double gain_tx, double gain_rx,
                                        std::uint64_t seed);

/// FNV-1a over the raw IEEE-754 bytes of both matrices.
std::uint64_t channel_digest(const ChannelSet& channels);

}  // namespace bdris
