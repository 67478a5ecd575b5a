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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>

namespace bdris {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Line-search denominator used for the conjugate-direction coefficient.
enum class BetaRule {
  PolakRibierePlus,  // <r+, r+ - r> / <r, r>
  DirectionDenominator,  // <r+, r+ - r> / <r, Xi>
};

enum class BeamformerKind { Uniform, Mmse };

/// Settings of the conjugate-gradient ascent.
struct CgaSettings {
  int max_iters = 8000;
  double tolerance = 1e-8;  // on the change of the true sum-rate
  int armijo_max_steps = 200;
  double armijo_coeff = 2e-11;
  double step_init = 1.0;
  double step_contract = 0.75;
  double nu = 1.0;  // symmetry penalty weight
  // Also reject Armijo trials that lower the true sum-rate. Off by default:
  // with nu > 0 it tends to freeze group- and fully-connected runs early.
  bool monotone_rate = false;
  // Independent random starts; the run with the best projected rate is kept.
  int restarts = 1;
  BetaRule beta_rule = BetaRule::PolakRibierePlus;
};

// System dimensions, power levels and solver settings for one design
// problem.
struct SystemConfig {
  int n_tx = 4;        // BS antennas N
  int n_users = 4;     // single-antenna users K
  int n_elements = 8;  // reflecting elements R
  int n_groups = 8;    // groups G, group size R / G

  double p_max = 1.0;          // W
  double noise_power = 1e-12;  // W

  CgaSettings solver;
  BeamformerKind beamformer = BeamformerKind::Uniform;

  int group_size() const { return n_elements / n_groups; }

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

}  // namespace bdris
