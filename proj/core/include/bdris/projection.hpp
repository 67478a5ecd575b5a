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

#include "bdris/scattering.hpp"
#include "bdris/types.hpp"

#include <vector>

namespace bdris {

/// Takagi factorization S = Q diag(sigma) Q^T of a complex symmetric matrix,
/// with Q unitary and sigma >= 0 in descending order.
struct TakagiFactors {
  CMatrix q;
  RVector sigma;
};

/// Computed from the real symmetric embedding [[Re S, Im S], [Im S, -Re S]],
/// whose positive eigenpairs (sigma, [x; y]) give Takagi vectors x + iy.
/// The null space of S (if any) is completed to a unitary basis.
TakagiFactors takagi(const CMatrix& symmetric);

/// Nearest symmetric unitary matrix to the symmetric part of one block:
/// symmetrize, SVD S = U Sigma V^H, return U V^H. Falls back to Q Q^T from
/// the Takagi factors when the SVD result is not symmetric within
/// kSymmetryFallbackTol (possible when S is singular).
CMatrix project_block_symmetric_unitary(const CMatrix& block);

inline constexpr double kSymmetryFallbackTol = 1e-6;

ScatteringMatrix project_symmetric_unitary(const ScatteringMatrix& theta);

struct BlockFeasibility {
  double unitarity = 0.0;  // ||B B^H - I||_F
  double symmetry = 0.0;   // ||B - B^T||_F
};

struct FeasibilityReport {
  Architecture architecture = Architecture::SingleConnected;
  std::vector<BlockFeasibility> blocks;
  double max_unitarity = 0.0;
  double max_symmetry = 0.0;
  // Single-connected only: max_i | |theta_ii| - 1 |.
  double max_modulus_error = 0.0;
  bool unitary_ok = false;
  bool symmetric_ok = false;
  bool modulus_ok = true;

  bool ok() const { return unitary_ok && symmetric_ok && modulus_ok; }
};

FeasibilityReport validate_feasibility(const ScatteringMatrix& theta,
                                       double tol_unitary,
                                       double tol_symmetry);

}  // namespace bdris
