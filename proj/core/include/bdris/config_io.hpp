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

#include "bdris/channel.hpp"
#include "bdris/scattering.hpp"
#include "bdris/types.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>

namespace bdris {

/// Everything needed to set up one design problem: dimensions, solver
/// settings, link geometry and (optionally) a default architecture.
///
/// JSON schema (all keys optional, unknown keys rejected):
///   n_tx, n_users, n_elements, n_groups, p_max, noise_power, nu, epsilon,
///   max_iters, armijo_max_steps, armijo_coeff, step_init, step_contract,
///   monotone_rate, restarts,
///   beta_rule ("pr+" | "direction"), beamformer ("uniform" | "mmse"),
///   architecture ("sc" | "fc" | "gc<n>"),
///   links: { bs_ris: {distance_m, exponent, ref_loss_db, ref_distance_m},
///            ris_users: {...} }
/// When "architecture" is present it determines n_groups.
struct ProblemConfig {
  SystemConfig system;
  Geometry geometry;
  std::optional<ArchitectureSpec> architecture;

  /// Copy of system with n_groups set for the given architecture.
  SystemConfig with_architecture(const ArchitectureSpec& arch) const;
};

ProblemConfig parse_problem_config(const nlohmann::json& j);
nlohmann::json to_json(const ProblemConfig& config);

/// Reads and parses a JSON file; errors carry the file path.
nlohmann::json read_json_file(const std::filesystem::path& path);

ProblemConfig load_problem_config(const std::filesystem::path& path);

}  // namespace bdris
