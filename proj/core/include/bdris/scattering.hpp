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

#include "bdris/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bdris {

enum class Architecture { SingleConnected, GroupConnected, FullyConnected };

/// Single-connected iff the group size is 1, fully-connected iff there is a
/// single group; everything in between is group-connected.
Architecture classify_architecture(int n_elements, int group_size);

std::string_view to_string(Architecture arch);

/// A named architecture choice as written on the command line or in an
/// experiment file: "sc", "fc" or "gc<size>" (e.g. "gc2", "gc4").
struct ArchitectureSpec {
  std::string label;
  int group_size = 1;  // 0 means "all elements" (fully-connected)

  static ArchitectureSpec parse(std::string_view text);

  /// Group size for a surface with n_elements elements. Throws
  /// std::invalid_argument when n_elements is not a multiple of it.
  int resolve_group_size(int n_elements) const;
};

/// Block-diagonal R x R scattering matrix. Only the G diagonal blocks are
/// stored, so off-block entries are structurally zero.
class ScatteringMatrix {
 public:
  ScatteringMatrix() = default;
  explicit ScatteringMatrix(std::vector<CMatrix> blocks);

  static ScatteringMatrix identity(int n_elements, int group_size);

  /// Throws std::invalid_argument if any off-block entry exceeds
  /// off_block_tol in magnitude.
  static ScatteringMatrix from_dense(const CMatrix& dense, int group_size,
                                     double off_block_tol = 0.0);

  int n_elements() const { return n_groups() * group_size_; }
  int n_groups() const { return static_cast<int>(blocks_.size()); }
  int group_size() const { return group_size_; }
  Architecture architecture() const {
    return classify_architecture(n_elements(), group_size_);
  }

  const std::vector<CMatrix>& blocks() const { return blocks_; }
  std::vector<CMatrix>& blocks() { return blocks_; }
  const CMatrix& block(int g) const { return blocks_.at(g); }
  CMatrix& block(int g) { return blocks_.at(g); }

  CMatrix dense() const;

 private:
  std::vector<CMatrix> blocks_;
  int group_size_ = 0;
};

}  // namespace bdris
