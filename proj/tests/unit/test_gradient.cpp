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

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace bdris {
namespace {

using testing::random_beamformer;
using testing::random_unitary;
using testing::small_config;
using testing::unit_channels;

struct Instance {
  SystemConfig config;
  ChannelSet channels;
  Beamformer beam;
  ScatteringMatrix theta;
  FpState fp;
};

Instance make_instance(Rng& rng, int n, int k, int r, int gs, std::uint64_t seed) {
  Instance in;
  in.config = small_config(n, k, r, gs);
  in.channels = unit_channels(in.config, seed);
  in.beam = random_beamformer(rng, in.config);
  in.theta = random_unitary(rng, r, gs);
  in.fp = refresh_fp(equivalent_channel(in.theta, in.channels), in.beam,
                     in.config.noise_power);
  return in;
}

BlockGradient analytic(const Instance& in) {
  return euclidean_gradient(in.theta, in.fp, in.channels, in.beam, in.config);
}

BlockGradient numeric(const Instance& in, double step = 1e-6) {
  return finite_difference_gradient(in.theta, in.fp, in.channels, in.beam,
                                    in.config, step);
}

TEST(EuclideanGradient, ZeroYSymmetricThetaIsZero) {
  Rng rng(1);
  Instance in = make_instance(rng, 2, 2, 4, 2, 3);
  in.theta = random_feasible(4, 2, 9);
  in.fp.y.setZero();
  for (const auto& g : analytic(in).grads) EXPECT_LT(g.norm(), 1e-14);
}

TEST(EuclideanGradient, ZeroYLeavesPenaltyTerm) {
  Rng rng(2);
  Instance in = make_instance(rng, 2, 2, 4, 2, 4);
  in.fp.y.setZero();
  const auto grad = analytic(in);
  for (int g = 0; g < 2; ++g) {
    const CMatrix& b = in.theta.block(g);
    EXPECT_TRUE(grad.grads[g].isApprox(-4.0 * (b - b.transpose()), 1e-14));
  }
}

TEST(EuclideanGradient, PenaltyScalesWithNu) {
  Rng rng(3);
  Instance in = make_instance(rng, 2, 2, 4, 4, 5);
  in.fp.y.setZero();
  in.fp.tau.setZero();
  in.config.solver.nu = 2.5;
  const CMatrix& b = in.theta.block(0);
  EXPECT_TRUE(analytic(in).grads[0].isApprox(-10.0 * (b - b.transpose()), 1e-14));
}

TEST(EuclideanGradient, MatchesFiniteDifferencesAcrossArchitectures) {
  Rng rng(4);
  int seed = 100;
  for (int r : {2, 4, 8}) {
    for (int gs : {1, 2, r}) {
      if (r % gs != 0) continue;
      for (int k : {2, 4}) {
        const Instance in = make_instance(rng, k, k, r, gs, ++seed);
        EXPECT_LE(max_relative_error(analytic(in), numeric(in)), 1e-6)
            << "R=" << r << " group size " << gs << " K=" << k;
      }
    }
  }
}

TEST(EuclideanGradient, MatchesFiniteDifferencesWithStaleAuxiliaries) {
  Rng rng(5);
  Instance in = make_instance(rng, 3, 2, 6, 3, 7);
  in.fp.tau << 0.7, 3.1;
  in.fp.y << Complex(0.2, -0.4), Complex(-1.0, 0.3);
  EXPECT_LE(max_relative_error(analytic(in), numeric(in)), 1e-6);
}

// The interference term needs the full scalar e_k v_i; a group-local scalar
// only coincides with it when there is a single group.
TEST(EuclideanGradient, GroupLocalScalarWouldDisagree) {
  Rng rng(6);
  const Instance in = make_instance(rng, 2, 2, 4, 2, 8);
  const BlockGradient good = analytic(in);

  const int rg = 2;
  const CMatrix gains_full = equivalent_channel(in.theta, in.channels).e * in.beam.v;
  BlockGradient local;
  for (int g = 0; g < 2; ++g) {
    const auto h = in.channels.h_rx.middleCols(g * rg, rg);
    const auto w = in.channels.h_tx.middleRows(g * rg, rg);
    const CMatrix gains_g = h * in.theta.block(g) * w * in.beam.v;
    CMatrix grad = -4.0 * in.config.solver.nu *
                   (in.theta.block(g) - in.theta.block(g).transpose());
    for (int k = 0; k < 2; ++k) {
      const double c = (1.0 + in.fp.tau(k)) / std::log(2.0);
      const CVector hk = h.row(k).adjoint();
      CVector tx = 2.0 * in.fp.y(k) * (w * in.beam.v.col(k)).conjugate();
      for (int i = 0; i < 2; ++i) {
        tx -= 2.0 * std::norm(in.fp.y(k)) * gains_g(k, i) *
              (w * in.beam.v.col(i)).conjugate();
      }
      grad += c * hk * tx.transpose();
    }
    local.grads.push_back(grad);
  }
  EXPECT_GT(max_relative_error(local, numeric(in)), 1e-3);
  EXPECT_LE(max_relative_error(good, numeric(in)), 1e-6);
  (void)gains_full;
}

TEST(EuclideanGradient, DirectionalDerivativeConsistency) {
  Rng rng(7);
  const Instance in = make_instance(rng, 3, 3, 6, 2, 9);
  const auto grad = analytic(in);
  TangentVector delta = testing::random_ambient(rng, in.theta);
  auto f = [&](double t) {
    std::vector<CMatrix> blocks;
    for (int g = 0; g < in.theta.n_groups(); ++g) {
      blocks.push_back(in.theta.block(g) + t * delta.blocks[g]);
    }
    return penalized_objective(ScatteringMatrix(blocks), in.fp, in.channels,
                               in.beam, in.config);
  };
  double slope = 0.0;
  for (int g = 0; g < in.theta.n_groups(); ++g) {
    slope += (grad.grads[g].adjoint() * delta.blocks[g]).trace().real();
  }
  const double t = 1e-5;
  EXPECT_NEAR((f(t) - f(-t)) / (2 * t), slope, 1e-6 * (1.0 + std::abs(slope)));
}

TEST(EuclideanGradient, ShapeChecks) {
  Rng rng(8);
  Instance in = make_instance(rng, 2, 2, 4, 2, 10);
  FpState bad{RVector::Zero(3), CVector::Zero(3)};
  EXPECT_THROW(euclidean_gradient(in.theta, bad, in.channels, in.beam, in.config),
               std::invalid_argument);
  EXPECT_THROW(euclidean_gradient(ScatteringMatrix::identity(6, 2), in.fp,
                                  in.channels, in.beam, in.config),
               std::invalid_argument);
}

TEST(DiagonalBeamGradient, UniformAllocationMatchesGeneralForm) {
  Rng rng(9);
  Instance in = make_instance(rng, 4, 4, 8, 4, 11);
  in.beam = init_beamformer_uniform(in.config);
  in.fp = refresh_fp(equivalent_channel(in.theta, in.channels), in.beam,
                     in.config.noise_power);
  const RVector p = RVector::Constant(4, in.config.p_max / 4);
  const auto fast = euclidean_gradient_diagonal_beam(in.theta, in.fp, in.channels,
                                                     p, in.config);
  EXPECT_LE(max_relative_error(fast, analytic(in)), 1e-12);
}

TEST(DiagonalBeamGradient, UnequalPowersMatchFiniteDifferences) {
  Rng rng(10);
  Instance in = make_instance(rng, 3, 3, 6, 3, 12);
  const RVector p = (RVector(3) << 0.2, 0.5, 0.3).finished();
  in.beam.v = CMatrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) in.beam.v(k, k) = std::sqrt(p(k));
  in.fp = refresh_fp(equivalent_channel(in.theta, in.channels), in.beam,
                     in.config.noise_power);
  const auto fast = euclidean_gradient_diagonal_beam(in.theta, in.fp, in.channels,
                                                     p, in.config);
  EXPECT_LE(max_relative_error(fast, numeric(in)), 1e-6);
}

TEST(DiagonalBeamGradient, SingleUserFullyConnected) {
  Rng rng(11);
  Instance in = make_instance(rng, 1, 1, 2, 2, 13);
  in.beam.v = CMatrix::Constant(1, 1, Complex(std::sqrt(0.8), 0.0));
  in.fp = refresh_fp(equivalent_channel(in.theta, in.channels), in.beam,
                     in.config.noise_power);
  const auto fast = euclidean_gradient_diagonal_beam(
      in.theta, in.fp, in.channels, RVector::Constant(1, 0.8), in.config);
  EXPECT_LE(max_relative_error(fast, numeric(in)), 1e-6);
}

TEST(DiagonalBeamGradient, ZeroPowerLeavesPenalty) {
  Rng rng(12);
  const Instance in = make_instance(rng, 2, 2, 4, 2, 14);
  const auto grad = euclidean_gradient_diagonal_beam(
      in.theta, in.fp, in.channels, RVector::Zero(2), in.config);
  for (int g = 0; g < 2; ++g) {
    const CMatrix& b = in.theta.block(g);
    EXPECT_TRUE(grad.grads[g].isApprox(-4.0 * (b - b.transpose()), 1e-14));
  }
}

TEST(DiagonalBeamGradient, RequiresFullyLoadedSystem) {
  Rng rng(13);
  const Instance in = make_instance(rng, 3, 2, 4, 2, 15);
  EXPECT_THROW(euclidean_gradient_diagonal_beam(in.theta, in.fp, in.channels,
                                                RVector::Ones(2), in.config),
               std::invalid_argument);
  const Instance sq = make_instance(rng, 2, 2, 4, 2, 16);
  EXPECT_THROW(euclidean_gradient_diagonal_beam(sq.theta, sq.fp, sq.channels,
                                                RVector::Ones(3), sq.config),
               std::invalid_argument);
}

TEST(FiniteDifference, QuadraticTestFunction) {
  Rng rng(14);
  const auto theta = testing::random_blocks(rng, 4, 2);
  const auto target = testing::random_blocks(rng, 4, 2);
  auto f = [&](const ScatteringMatrix& t) {
    double v = 0.0;
    for (int g = 0; g < 2; ++g) v -= (t.block(g) - target.block(g)).squaredNorm();
    return v;
  };
  const auto fd = finite_difference_gradient(f, theta, 1e-4);
  for (int g = 0; g < 2; ++g) {
    const CMatrix expected = 2.0 * (target.block(g) - theta.block(g));
    EXPECT_LT((fd.grads[g] - expected).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(FiniteDifference, SecondOrderAccuracy) {
  Rng rng(15);
  const auto theta = testing::random_blocks(rng, 2, 2);
  // Cubic in the entries, so the central-difference error is exactly c*h^2.
  auto f = [](const ScatteringMatrix& t) {
    double v = 0.0;
    for (Eigen::Index i = 0; i < t.block(0).size(); ++i) {
      const Complex z = t.block(0)(i);
      v += std::pow(z.real(), 3) + std::pow(z.imag(), 3);
    }
    return v;
  };
  auto err = [&](double h) {
    const auto fd = finite_difference_gradient(f, theta, h);
    CMatrix exact(2, 2);
    for (Eigen::Index i = 0; i < 4; ++i) {
      const Complex z = theta.block(0)(i);
      exact(i) = Complex(3 * z.real() * z.real(), 3 * z.imag() * z.imag());
    }
    return (fd.grads[0] - exact).cwiseAbs().maxCoeff();
  };
  const double ratio = err(1e-2) / err(5e-3);
  EXPECT_NEAR(ratio, 4.0, 0.1);
}

TEST(FiniteDifference, PenaltyOnlyObjective) {
  Rng rng(16);
  const auto theta = testing::random_blocks(rng, 6, 3);
  const double nu = 0.7;
  auto f = [&](const ScatteringMatrix& t) { return -nu * penalty(t); };
  const auto fd = finite_difference_gradient(f, theta, 1e-5);
  for (int g = 0; g < 2; ++g) {
    const CMatrix& b = theta.block(g);
    EXPECT_LT((fd.grads[g] + 4.0 * nu * (b - b.transpose())).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(FiniteDifference, RejectsNonPositiveStep) {
  auto f = [](const ScatteringMatrix&) { return 0.0; };
  EXPECT_THROW(finite_difference_gradient(f, ScatteringMatrix::identity(2, 1), 0.0),
               std::invalid_argument);
}

TEST(MaxRelativeError, Basics) {
  BlockGradient a{{CMatrix::Constant(2, 2, Complex(1.0, 0.0))}};
  BlockGradient b{{CMatrix::Constant(2, 2, Complex(2.0, 0.0))}};
  EXPECT_DOUBLE_EQ(max_relative_error(a, b), 0.5);
  BlockGradient z{{CMatrix::Zero(2, 2)}};
  EXPECT_EQ(max_relative_error(z, z), 0.0);
  EXPECT_TRUE(std::isinf(max_relative_error(a, z)));
  BlockGradient two{{CMatrix::Zero(2, 2), CMatrix::Zero(2, 2)}};
  EXPECT_THROW(max_relative_error(a, two), std::invalid_argument);
}

}  // namespace
}  // namespace bdris
