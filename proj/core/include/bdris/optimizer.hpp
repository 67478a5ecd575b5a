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
#include "bdris/manifold.hpp"
#include "bdris/projection.hpp"
#include "bdris/scattering.hpp"
#include "bdris/system.hpp"
#include "bdris/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string_view>
#include <vector>

namespace bdris {

struct TraceRecord {
  int iter = 0;
  double true_rate = 0.0;   // sum-rate of the iterate, bits/s/Hz
  double surrogate = 0.0;   // penalized surrogate after the auxiliary refresh
  double step = 0.0;        // accepted Armijo step
  double grad_norm = 0.0;   // ||r|| of the Riemannian gradient
  double beta = 0.0;
  double armijo_gain = 0.0;  // surrogate increase with auxiliaries frozen
  double unitarity = 0.0;    // max blockwise ||B B^H - I||_F of the iterate
};

enum class StopReason { Converged, MaxIterations, Stalled };

std::string_view to_string(StopReason reason);

struct OptimizerTrace {
  std::vector<TraceRecord> records;  // records[0] is the starting point
  double initial_rate = 0.0;
  double final_rate = 0.0;      // last iterate, before the terminal projection
  double projected_rate = 0.0;  // after the terminal projection
  double symmetry_residual = 0.0;
  double unitarity_residual = 0.0;
  int iters_used = 0;
  bool converged = false;
  StopReason reason = StopReason::MaxIterations;
};

struct ArmijoResult {
  double alpha = 0.0;  // 0 signals a stall
  ScatteringMatrix theta;
  double objective = 0.0;
  int trials = 0;
};

/// Backtracking along the retraction curve with auxiliaries held fixed.
/// Accepts the first alpha = step_init * step_contract^m, m < armijo_max_steps,
/// for which the surrogate strictly increases and
///   f(R(theta, alpha * direction)) >= f0 + armijo_coeff * alpha * slope,
/// where slope = <r, direction>. A trial whose true sum-rate falls below
/// rate_floor is rejected as well, and so is a failed retraction. Returns
/// alpha = 0 and theta unchanged if no trial is accepted.
ArmijoResult armijo_search(const ScatteringMatrix& theta,
                           const TangentVector& direction, double slope,
                           double f0, const FpState& fp,
                           const ChannelSet& channels, const Beamformer& beam,
                           const SystemConfig& config,
                           double rate_floor = -std::numeric_limits<double>::infinity());

struct CgaResult {
  ScatteringMatrix theta;      // projected onto symmetric unitary blocks
  ScatteringMatrix theta_raw;  // last iterate before the projection
  OptimizerTrace trace;
};

/// Conjugate-gradient ascent on the product of unitary groups for the
/// penalized surrogate, with the auxiliaries refreshed after every accepted
/// step and a terminal symmetric-unitary projection. The starting point is
/// random_feasible(config, seed). With solver.restarts > 1 further starts use
/// mix_seed(seed, r) and the result with the best projected rate is returned.
CgaResult cga_optimize(const ChannelSet& channels, const Beamformer& beam,
                       const SystemConfig& config, std::uint64_t seed);

/// Same, starting from a given point with unitary blocks.
CgaResult cga_optimize_from(const ScatteringMatrix& start,
                            const ChannelSet& channels, const Beamformer& beam,
                            const SystemConfig& config);

/// Beamformer chosen by config.beamformer. The MMSE variant is computed on
/// the equivalent channel of a random single-connected surface drawn from
/// seed, so it does not depend on the architecture.
Beamformer design_beamformer(const SystemConfig& config,
                             const ChannelSet& channels, std::uint64_t seed);

/// One CSV line per record: iter,eta,eta_breve,alpha,grad_norm,beta
void write_trace_csv(std::ostream& os, const OptimizerTrace& trace);

}  // namespace bdris
