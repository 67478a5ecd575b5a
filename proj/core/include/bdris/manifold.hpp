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

#include "bdris/gradient.hpp"
#include "bdris/scattering.hpp"
#include "bdris/types.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bdris {

/// Blockwise tangent vector at a point of the product of unitary groups.
struct TangentVector {
  std::vector<CMatrix> blocks;

  static TangentVector zeros_like(const ScatteringMatrix& theta);

  TangentVector& operator+=(const TangentVector& other);
  TangentVector& operator*=(double scale);
  friend TangentVector operator+(TangentVector a, const TangentVector& b) {
    return a += b;
  }
  friend TangentVector operator*(double scale, TangentVector a) {
    return a *= scale;
  }

  bool is_zero() const;
};

/// Raised when Theta_g + alpha Xi_g is numerically rank deficient.
class RetractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ||B B^H - I||_F.
double unitarity_residual(const CMatrix& block);

/// Largest blockwise unitarity residual.
double unitarity_residual(const ScatteringMatrix& theta);

/// Q factor of a QR decomposition with the diagonal of R forced real and
/// non-negative, which makes Q unique for full-rank input. Throws
/// RetractionError if some |R_ii| <= rank_tol * ||A||_F.
CMatrix positive_diagonal_qr(const CMatrix& a, double rank_tol = 1e-12);

/// xi = G - Theta (Theta^H G + G^H Theta) / 2 per block. Requires each
/// block of theta to be unitary within 1e-8 (throws std::domain_error).
TangentVector tangent_project(const BlockGradient& grad,
                              const ScatteringMatrix& theta);

/// Re-projection of a tangent vector from another base point (used as the
/// vector transport between iterates).
TangentVector tangent_project(const TangentVector& ambient,
                              const ScatteringMatrix& theta);

/// Q(Theta_g + alpha Xi_g) per block. alpha = 0 or a zero direction returns
/// theta unchanged.
ScatteringMatrix retract(const ScatteringMatrix& theta,
                         const TangentVector& direction, double alpha);

/// Re sum_g tr(a_g^H b_g).
double inner(const TangentVector& a, const TangentVector& b);

/// Random point with every block symmetric and unitary: Theta_g = U U^T
/// with U Haar-distributed (positive-diagonal QR of a Gaussian matrix).
ScatteringMatrix random_feasible(int n_elements, int group_size,
                                 std::uint64_t seed);

ScatteringMatrix random_feasible(const SystemConfig& config,
                                 std::uint64_t seed);

}  // namespace bdris
