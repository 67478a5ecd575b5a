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

#include <cstdint>
#include <random>

namespace bdris {

/// Portable random source.
///
/// The bit stream is std::mt19937_64 (fully specified by the standard). The
/// library distributions in <random> are implementation-defined, so variates
/// are derived by hand:
///   - uniform in (0, 1]: ((x >> 11) + 1) * 2^-53
///   - circularly-symmetric complex Gaussian CN(0, var): magnitude
///     sqrt(-var * ln u1) and phase 2*pi*u2, drawing u1 then u2.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  Complex complex_normal(double variance = 1.0);

  CMatrix complex_normal_matrix(Eigen::Index rows, Eigen::Index cols,
                                double variance = 1.0);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive independent streams from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace bdris
