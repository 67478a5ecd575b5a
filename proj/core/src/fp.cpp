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

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bdris {

RVector update_tau(const EquivalentChannel& eq, const Beamformer& beam,
                   double noise_power) {
  return sinrs(eq, beam, noise_power);
}

CVector update_y(const EquivalentChannel& eq, const Beamformer& beam,
                 double noise_power) {
  const CMatrix gains = eq.e * beam.v;
  CVector y(gains.rows());
  for (Eigen::Index k = 0; k < gains.rows(); ++k) {
    y(k) = gains(k, k) / (gains.row(k).squaredNorm() + noise_power);
  }
  return y;
}

FpState refresh_fp(const EquivalentChannel& eq, const Beamformer& beam,
                   double noise_power) {
  return {update_tau(eq, beam, noise_power), update_y(eq, beam, noise_power)};
}

namespace {

double surrogate_from_gains(double tau, Complex y, Complex signal,
                            double received_power, double noise_power) {
  constexpr double kLn2 = std::numbers::ln2;
  const double quadratic = 2.0 * (std::conj(y) * signal).real() -
                           std::norm(y) * (received_power + noise_power);
  return std::log2(1.0 + tau) - tau / kLn2 + (1.0 + tau) / kLn2 * quadratic;
}

void check_fp(const FpState& fp, Eigen::Index k_users) {
  if (fp.tau.size() != k_users || fp.y.size() != k_users) {
    throw std::invalid_argument("FpState size does not match the user count");
  }
}

}  // namespace

double surrogate_rate(int k, const FpState& fp, const EquivalentChannel& eq,
                      const Beamformer& beam, double noise_power) {
  check_fp(fp, eq.e.rows());
  if (k < 0 || k >= eq.e.rows()) {
    throw std::out_of_range("surrogate_rate: user index out of range");
  }
  const Eigen::RowVectorXcd gains = eq.e.row(k) * beam.v;
  return surrogate_from_gains(fp.tau(k), fp.y(k), gains(k), gains.squaredNorm(),
                              noise_power);
}

double surrogate_sum(const FpState& fp, const EquivalentChannel& eq,
                     const Beamformer& beam, double noise_power) {
  check_fp(fp, eq.e.rows());
  const CMatrix gains = eq.e * beam.v;
  double total = 0.0;
  for (Eigen::Index k = 0; k < gains.rows(); ++k) {
    total += surrogate_from_gains(fp.tau(k), fp.y(k), gains(k, k),
                                  gains.row(k).squaredNorm(), noise_power);
  }
  return total;
}

double penalty(const ScatteringMatrix& theta) {
  double total = 0.0;
  for (const auto& block : theta.blocks()) {
    total += (block - block.transpose()).squaredNorm();
  }
  return total;
}

double penalized_objective(const ScatteringMatrix& theta, const FpState& fp,
                           const ChannelSet& channels, const Beamformer& beam,
                           const SystemConfig& config) {
  const EquivalentChannel eq = equivalent_channel(theta, channels);
  return surrogate_sum(fp, eq, beam, config.noise_power) -
         config.solver.nu * penalty(theta);
}

}  // namespace bdris
