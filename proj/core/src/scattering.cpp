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

#include "bdris/scattering.hpp"

#include <charconv>
#include <stdexcept>

namespace bdris {

Architecture classify_architecture(int n_elements, int group_size) {
  if (group_size == 1) return Architecture::SingleConnected;
  if (group_size == n_elements) return Architecture::FullyConnected;
  return Architecture::GroupConnected;
}

std::string_view to_string(Architecture arch) {
  switch (arch) {
    case Architecture::SingleConnected: return "single-connected";
    case Architecture::GroupConnected: return "group-connected";
    case Architecture::FullyConnected: return "fully-connected";
  }
  return "unknown";
}

ArchitectureSpec ArchitectureSpec::parse(std::string_view text) {
  if (text == "sc") return {"sc", 1};
  if (text == "fc") return {"fc", 0};
  if (text.size() > 2 && text.substr(0, 2) == "gc") {
    int size = 0;
    const auto digits = text.substr(2);
    const auto [end, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), size);
    if (ec == std::errc{} && end == digits.data() + digits.size() && size >= 1) {
      return {std::string(text), size};
    }
  }
  throw std::invalid_argument("unknown architecture '" + std::string(text) +
                              "' (expected sc, fc or gc<size>)");
}

int ArchitectureSpec::resolve_group_size(int n_elements) const {
  if (n_elements < 1) throw std::invalid_argument("n_elements must be >= 1");
  const int size = group_size == 0 ? n_elements : group_size;
  if (n_elements % size != 0) {
    throw std::invalid_argument("architecture " + label + ": R=" +
                                std::to_string(n_elements) +
                                " is not divisible by group size " +
                                std::to_string(size));
  }
  return size;
}

ScatteringMatrix::ScatteringMatrix(std::vector<CMatrix> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) {
    throw std::invalid_argument("ScatteringMatrix needs at least one block");
  }
  group_size_ = static_cast<int>(blocks_.front().rows());
  for (const auto& b : blocks_) {
    if (b.rows() != group_size_ || b.cols() != group_size_) {
      throw std::invalid_argument(
          "ScatteringMatrix blocks must all be square of equal size");
    }
  }
  if (group_size_ < 1) {
    throw std::invalid_argument("ScatteringMatrix blocks must be non-empty");
  }
}

ScatteringMatrix ScatteringMatrix::identity(int n_elements, int group_size) {
  if (group_size < 1 || n_elements % group_size != 0) {
    throw std::invalid_argument("group size must divide n_elements");
  }
  std::vector<CMatrix> blocks(n_elements / group_size,
                              CMatrix::Identity(group_size, group_size));
  return ScatteringMatrix(std::move(blocks));
}

ScatteringMatrix ScatteringMatrix::from_dense(const CMatrix& dense,
                                              int group_size,
                                              double off_block_tol) {
  if (dense.rows() != dense.cols()) {
    throw std::invalid_argument("scattering matrix must be square");
  }
  const auto r = static_cast<int>(dense.rows());
  if (group_size < 1 || r % group_size != 0) {
    throw std::invalid_argument("group size must divide the matrix size");
  }
  const int n_groups = r / group_size;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i / group_size != j / group_size &&
          std::abs(dense(i, j)) > off_block_tol) {
        throw std::invalid_argument(
            "matrix is not block-diagonal: entry (" + std::to_string(i) + "," +
            std::to_string(j) + ") lies outside the diagonal blocks");
      }
    }
  }
  std::vector<CMatrix> blocks;
  blocks.reserve(n_groups);
  for (int g = 0; g < n_groups; ++g) {
    blocks.emplace_back(
        dense.block(g * group_size, g * group_size, group_size, group_size));
  }
  return ScatteringMatrix(std::move(blocks));
}

CMatrix ScatteringMatrix::dense() const {
  const int r = n_elements();
  CMatrix out = CMatrix::Zero(r, r);
  for (int g = 0; g < n_groups(); ++g) {
    out.block(g * group_size_, g * group_size_, group_size_, group_size_) =
        blocks_[g];
  }
  return out;
}

}  // namespace bdris
