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

#include "bdris/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bdris {

namespace {

void check_shapes(const ScatteringMatrix& theta, const FpState& fp,
                  const ChannelSet& channels) {
  if (channels.h_tx.rows() != theta.n_elements() ||
      channels.h_rx.cols() != theta.n_elements()) {
    throw std::invalid_argument("gradient: channel shapes do not match theta");
  }
  if (fp.tau.size() != channels.h_rx.rows() ||
      fp.y.size() != channels.h_rx.rows()) {
    throw std::invalid_argument("gradient: FpState size does not match K");
  }
}

}  // namespace

BlockGradient euclidean_gradient(const ScatteringMatrix& theta,
                                 const FpState& fp, const ChannelSet& channels,
                                 const Beamformer& beam,
                                 const SystemConfig& config) {
  check_shapes(theta, fp, channels);
  const int rg = theta.group_size();
  const auto k_users = channels.h_rx.rows();

  // gains(k, i) = e_k v_i with the full equivalent channel.
  const CMatrix gains = equivalent_channel(theta, channels).e * beam.v;

  // Per-user weights 2 (1+tau_k)/ln2 * y_k and 2 (1+tau_k)/ln2 * |y_k|^2.
  CVector signal_weight(k_users);
  RVector interference_weight(k_users);
  for (Eigen::Index k = 0; k < k_users; ++k) {
    const double c = 2.0 * (1.0 + fp.tau(k)) / std::numbers::ln2;
    signal_weight(k) = c * fp.y(k);
    interference_weight(k) = c * std::norm(fp.y(k));
  }
  // Column k of conj(B) * mix, with B = W^(g) V, is
  //   conj(b_k) signal_weight_k - sum_i conj(b_i) gains(k, i) interference_weight_k.
  CMatrix mix = -gains.transpose() * interference_weight.asDiagonal();
  mix.diagonal() += signal_weight;

  BlockGradient out;
  out.grads.reserve(theta.n_groups());
  for (int g = 0; g < theta.n_groups(); ++g) {
    const auto h = channels.h_rx.middleCols(g * rg, rg);  // K x R_G
    const CMatrix b = channels.h_tx.middleRows(g * rg, rg) * beam.v;
    const CMatrix m = b.conjugate() * mix;                 // R_G x K
    const CMatrix& blk = theta.block(g);
    out.grads.emplace_back(h.adjoint() * m.transpose() -
                           4.0 * config.solver.nu * (blk - blk.transpose()));
  }
  return out;
}

BlockGradient euclidean_gradient_diagonal_beam(const ScatteringMatrix& theta,
                                               const FpState& fp,
                                               const ChannelSet& channels,
                                               const RVector& power_alloc,
                                               const SystemConfig& config) {
  check_shapes(theta, fp, channels);
  const auto k_users = channels.h_rx.rows();
  const auto n_tx = channels.h_tx.cols();
  if (k_users != n_tx) {
    throw std::invalid_argument(
        "diagonal power allocation requires a fully-loaded system (K = N)");
  }
  if (power_alloc.size() != k_users) {
    throw std::invalid_argument("power allocation length must equal K");
  }
  const int rg = theta.group_size();
  const RVector amplitude = power_alloc.cwiseSqrt();

  // With V = diag(sqrt(p)), e_k v_i = sqrt(p_i) e_{k,i} and W v_i = sqrt(p_i) w_i.
  const CMatrix e = equivalent_channel(theta, channels).e;

  BlockGradient out;
  out.grads.reserve(theta.n_groups());
  for (int g = 0; g < theta.n_groups(); ++g) {
    const auto h = channels.h_rx.middleCols(g * rg, rg);
    const auto w = channels.h_tx.middleRows(g * rg, rg);  // columns w_i^(g)
    const CMatrix& blk = theta.block(g);
    CMatrix grad = -4.0 * config.solver.nu * (blk - blk.transpose());
    for (Eigen::Index k = 0; k < k_users; ++k) {
      const double c = (1.0 + fp.tau(k)) / std::numbers::ln2;
      const CVector hk = h.row(k).transpose().conjugate();
      // 2 sqrt(p_k) y_k conj(h_k) conj(w_k)^T
      CVector tx = 2.0 * amplitude(k) * fp.y(k) * w.col(k).conjugate();
      // - 2 |y_k|^2 sum_i p_i e_{k,i} conj(h_k) conj(w_i)^T
      tx -= 2.0 * std::norm(fp.y(k)) *
            (w.conjugate() * (power_alloc.cast<Complex>().cwiseProduct(
                                 e.row(k).transpose())));
      grad += c * hk * tx.transpose();
    }
    out.grads.push_back(std::move(grad));
  }
  return out;
}

BlockGradient finite_difference_gradient(const BlockObjective& objective,
                                         const ScatteringMatrix& theta,
                                         double step) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("finite difference step must be positive");
  }
  BlockGradient out;
  ScatteringMatrix probe = theta;
  const Complex unit_im(0.0, 1.0);
  for (int g = 0; g < theta.n_groups(); ++g) {
    const CMatrix& base = theta.block(g);
    CMatrix grad(base.rows(), base.cols());
    for (Eigen::Index i = 0; i < base.rows(); ++i) {
      for (Eigen::Index j = 0; j < base.cols(); ++j) {
        double partial[2];
        const Complex dirs[2] = {Complex(1.0, 0.0), unit_im};
        for (int part = 0; part < 2; ++part) {
          probe.block(g)(i, j) = base(i, j) + step * dirs[part];
          const double plus = objective(probe);
          probe.block(g)(i, j) = base(i, j) - step * dirs[part];
          const double minus = objective(probe);
          probe.block(g)(i, j) = base(i, j);
          partial[part] = (plus - minus) / (2.0 * step);
        }
        grad(i, j) = Complex(partial[0], partial[1]);
      }
    }
    out.grads.push_back(std::move(grad));
  }
  return out;
}

BlockGradient finite_difference_gradient(const ScatteringMatrix& theta,
                                         const FpState& fp,
                                         const ChannelSet& channels,
                                         const Beamformer& beam,
                                         const SystemConfig& config,
                                         double step) {
  return finite_difference_gradient(
      [&](const ScatteringMatrix& t) {
        return penalized_objective(t, fp, channels, beam, config);
      },
      theta, step);
}

double max_relative_error(const BlockGradient& a, const BlockGradient& b) {
  if (a.grads.size() != b.grads.size()) {
    throw std::invalid_argument("max_relative_error: block count mismatch");
  }
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t g = 0; g < a.grads.size(); ++g) {
    if (a.grads[g].rows() != b.grads[g].rows() ||
        a.grads[g].cols() != b.grads[g].cols()) {
      throw std::invalid_argument("max_relative_error: block shape mismatch");
    }
    diff = std::max(diff, (a.grads[g] - b.grads[g]).cwiseAbs().maxCoeff());
    scale = std::max(scale, b.grads[g].cwiseAbs().maxCoeff());
  }
  if (scale == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / scale;
}

}  // namespace bdris
