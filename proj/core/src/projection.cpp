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

#include "bdris/projection.hpp"

#include "bdris/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bdris {

TakagiFactors takagi(const CMatrix& symmetric) {
  if (symmetric.rows() != symmetric.cols()) {
    throw std::invalid_argument("takagi: matrix must be square");
  }
  const auto n = symmetric.rows();
  const Eigen::MatrixXd a = symmetric.real();
  const Eigen::MatrixXd b = symmetric.imag();
  Eigen::MatrixXd embed(2 * n, 2 * n);
  embed << a, b, b, -a;

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(embed);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("takagi: eigen-decomposition failed");
  }
  // Eigenvalues come in +/- sigma pairs; the top n carry the Takagi vectors.
  const Eigen::VectorXd& values = eig.eigenvalues();
  const double sigma_max = std::max(values(2 * n - 1), 0.0);
  const double tol = 1e-12 * std::max(sigma_max, 1.0) * static_cast<double>(n);

  TakagiFactors out;
  out.sigma = RVector::Zero(n);
  CMatrix positive(n, n);
  Eigen::Index p = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index idx = 2 * n - 1 - j;
    if (values(idx) <= tol) break;
    const auto v = eig.eigenvectors().col(idx);
    positive.col(p) = v.head(n).cast<Complex>() + Complex(0.0, 1.0) * v.tail(n).cast<Complex>();
    out.sigma(p) = values(idx);
    ++p;
  }
  if (p == n) {
    out.q = positive;
    return out;
  }
  // Complete the null-space directions with an orthonormal complement.
  CMatrix seed = CMatrix::Identity(n, n);
  seed.leftCols(p) = positive.leftCols(p);
  const Eigen::HouseholderQR<CMatrix> qr(seed);
  const CMatrix basis = qr.householderQ() * CMatrix::Identity(n, n);
  out.q.resize(n, n);
  out.q.leftCols(p) = positive.leftCols(p);
  out.q.rightCols(n - p) = basis.rightCols(n - p);
  return out;
}

CMatrix project_block_symmetric_unitary(const CMatrix& block) {
  if (block.rows() != block.cols()) {
    throw std::invalid_argument("projection: block must be square");
  }
  const CMatrix sym = 0.5 * (block + block.transpose());
  const Eigen::JacobiSVD<CMatrix> svd(sym, Eigen::ComputeFullU | Eigen::ComputeFullV);
  CMatrix out = svd.matrixU() * svd.matrixV().adjoint();
  if ((out - out.transpose()).norm() > kSymmetryFallbackTol) {
    const TakagiFactors tk = takagi(sym);
    out = tk.q * tk.q.transpose();
  }
  return out;
}

ScatteringMatrix project_symmetric_unitary(const ScatteringMatrix& theta) {
  std::vector<CMatrix> blocks;
  blocks.reserve(theta.n_groups());
  for (const auto& b : theta.blocks()) {
    blocks.push_back(project_block_symmetric_unitary(b));
  }
  return ScatteringMatrix(std::move(blocks));
}

FeasibilityReport validate_feasibility(const ScatteringMatrix& theta,
                                       double tol_unitary,
                                       double tol_symmetry) {
  FeasibilityReport report;
  report.architecture = theta.architecture();
  for (const auto& b : theta.blocks()) {
    BlockFeasibility f{unitarity_residual(b), (b - b.transpose()).norm()};
    report.max_unitarity = std::max(report.max_unitarity, f.unitarity);
    report.max_symmetry = std::max(report.max_symmetry, f.symmetry);
    report.blocks.push_back(f);
  }
  report.unitary_ok = report.max_unitarity <= tol_unitary;
  report.symmetric_ok = report.max_symmetry <= tol_symmetry;
  if (report.architecture == Architecture::SingleConnected) {
    for (const auto& b : theta.blocks()) {
      report.max_modulus_error =
          std::max(report.max_modulus_error, std::abs(std::abs(b(0, 0)) - 1.0));
    }
    report.modulus_ok = report.max_modulus_error <= tol_unitary;
  }
  return report;
}

}  // namespace bdris
