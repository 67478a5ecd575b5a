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

#include "bdris/manifold.hpp"

#include "bdris/rng.hpp"

#include <algorithm>
#include <cmath>

namespace bdris {

namespace {

constexpr double kBaseUnitarityTol = 1e-8;

void check_blocks(const std::vector<CMatrix>& blocks,
                  const ScatteringMatrix& theta, const char* what) {
  if (static_cast<int>(blocks.size()) != theta.n_groups()) {
    throw std::invalid_argument(std::string(what) + ": block count mismatch");
  }
  for (const auto& b : blocks) {
    if (b.rows() != theta.group_size() || b.cols() != theta.group_size()) {
      throw std::invalid_argument(std::string(what) + ": block shape mismatch");
    }
  }
}

TangentVector project_blocks(const std::vector<CMatrix>& ambient,
                             const ScatteringMatrix& theta) {
  check_blocks(ambient, theta, "tangent_project");
  TangentVector out;
  out.blocks.reserve(ambient.size());
  for (int g = 0; g < theta.n_groups(); ++g) {
    const CMatrix& base = theta.block(g);
    if (unitarity_residual(base) > kBaseUnitarityTol) {
      throw std::domain_error(
          "tangent_project: base point block " + std::to_string(g) +
          " is not unitary");
    }
    const CMatrix& grad = ambient[g];
    const CMatrix sym = base.adjoint() * grad + grad.adjoint() * base;
    out.blocks.emplace_back(grad - 0.5 * base * sym);
  }
  return out;
}

}  // namespace

TangentVector TangentVector::zeros_like(const ScatteringMatrix& theta) {
  TangentVector out;
  out.blocks.assign(theta.n_groups(),
                    CMatrix::Zero(theta.group_size(), theta.group_size()));
  return out;
}

TangentVector& TangentVector::operator+=(const TangentVector& other) {
  if (other.blocks.size() != blocks.size()) {
    throw std::invalid_argument("TangentVector: block count mismatch");
  }
  for (std::size_t g = 0; g < blocks.size(); ++g) blocks[g] += other.blocks[g];
  return *this;
}

TangentVector& TangentVector::operator*=(double scale) {
  for (auto& b : blocks) b *= scale;
  return *this;
}

bool TangentVector::is_zero() const {
  return std::all_of(blocks.begin(), blocks.end(),
                     [](const CMatrix& b) { return b.isZero(0.0); });
}

double unitarity_residual(const CMatrix& block) {
  return (block * block.adjoint() -
          CMatrix::Identity(block.rows(), block.rows()))
      .norm();
}

double unitarity_residual(const ScatteringMatrix& theta) {
  double worst = 0.0;
  for (const auto& b : theta.blocks()) worst = std::max(worst, unitarity_residual(b));
  return worst;
}

CMatrix positive_diagonal_qr(const CMatrix& a, double rank_tol) {
  const Eigen::HouseholderQR<CMatrix> qr(a);
  CMatrix q = qr.householderQ() * CMatrix::Identity(a.rows(), a.cols());
  const CMatrix& r = qr.matrixQR();
  const double scale = a.norm();
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (!(mag > rank_tol * scale)) {
      throw RetractionError("QR retraction: matrix is numerically rank deficient");
    }
    q.col(j) *= d / mag;
  }
  return q;
}

TangentVector tangent_project(const BlockGradient& grad,
                              const ScatteringMatrix& theta) {
  return project_blocks(grad.grads, theta);
}

TangentVector tangent_project(const TangentVector& ambient,
                              const ScatteringMatrix& theta) {
  return project_blocks(ambient.blocks, theta);
}

ScatteringMatrix retract(const ScatteringMatrix& theta,
                         const TangentVector& direction, double alpha) {
  check_blocks(direction.blocks, theta, "retract");
  if (!(alpha >= 0.0)) throw std::invalid_argument("retract: alpha must be >= 0");
  if (alpha == 0.0 || direction.is_zero()) return theta;
  std::vector<CMatrix> blocks;
  blocks.reserve(theta.n_groups());
  for (int g = 0; g < theta.n_groups(); ++g) {
    blocks.push_back(
        positive_diagonal_qr(theta.block(g) + alpha * direction.blocks[g]));
  }
  return ScatteringMatrix(std::move(blocks));
}

double inner(const TangentVector& a, const TangentVector& b) {
  if (a.blocks.size() != b.blocks.size()) {
    throw std::invalid_argument("inner: block count mismatch");
  }
  double total = 0.0;
  for (std::size_t g = 0; g < a.blocks.size(); ++g) {
    if (a.blocks[g].rows() != b.blocks[g].rows() ||
        a.blocks[g].cols() != b.blocks[g].cols()) {
      throw std::invalid_argument("inner: block shape mismatch");
    }
    // Re tr(A^H B) = Re sum_ij conj(A_ij) B_ij
    total += a.blocks[g].cwiseProduct(b.blocks[g].conjugate()).sum().real();
  }
  return total;
}

ScatteringMatrix random_feasible(int n_elements, int group_size,
                                 std::uint64_t seed) {
  if (group_size < 1 || n_elements % group_size != 0) {
    throw std::invalid_argument("random_feasible: group size must divide R");
  }
  Rng rng(mix_seed(seed, 0x7468657461ULL));
  std::vector<CMatrix> blocks;
  for (int g = 0; g < n_elements / group_size; ++g) {
    const CMatrix u = positive_diagonal_qr(
        rng.complex_normal_matrix(group_size, group_size), 0.0);
    const CMatrix sym = u * u.transpose();
    blocks.push_back(0.5 * (sym + sym.transpose()));
  }
  return ScatteringMatrix(std::move(blocks));
}

ScatteringMatrix random_feasible(const SystemConfig& config,
                                 std::uint64_t seed) {
  config.validate();
  return random_feasible(config.n_elements, config.group_size(), seed);
}

}  // namespace bdris
