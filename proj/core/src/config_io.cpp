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

#include "bdris/config_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

namespace bdris {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) {
      throw std::invalid_argument("unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void read_if(const json& j, const char* key, T& target) {
  if (!j.contains(key)) return;
  try {
    target = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("key '") + key + "': " + e.what());
  }
}

LinkGeometry parse_link(const json& j, const std::string& name) {
  if (!j.is_object()) throw std::invalid_argument("link '" + name + "' must be an object");
  reject_unknown(j, {"distance_m", "exponent", "ref_loss_db", "ref_distance_m"},
                 "link '" + name + "'");
  LinkGeometry link;
  read_if(j, "distance_m", link.distance_m);
  read_if(j, "exponent", link.exponent);
  read_if(j, "ref_loss_db", link.ref_loss_db);
  read_if(j, "ref_distance_m", link.ref_distance_m);
  return link;
}

json link_json(const LinkGeometry& link) {
  return {{"distance_m", link.distance_m},
          {"exponent", link.exponent},
          {"ref_loss_db", link.ref_loss_db},
          {"ref_distance_m", link.ref_distance_m}};
}

}  // namespace

SystemConfig ProblemConfig::with_architecture(const ArchitectureSpec& arch) const {
  SystemConfig out = system;
  out.n_groups = out.n_elements / arch.resolve_group_size(out.n_elements);
  return out;
}

ProblemConfig parse_problem_config(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  reject_unknown(j,
                 {"n_tx", "n_users", "n_elements", "n_groups", "p_max",
                  "noise_power", "nu", "epsilon", "max_iters",
                  "armijo_max_steps", "armijo_coeff", "step_init",
                  "step_contract", "monotone_rate", "restarts", "beta_rule", "beamformer", "architecture",
                  "links"},
                 "config");
  ProblemConfig out;
  SystemConfig& s = out.system;
  read_if(j, "n_tx", s.n_tx);
  read_if(j, "n_users", s.n_users);
  read_if(j, "n_elements", s.n_elements);
  s.n_groups = s.n_elements;
  read_if(j, "n_groups", s.n_groups);
  read_if(j, "p_max", s.p_max);
  read_if(j, "noise_power", s.noise_power);
  read_if(j, "nu", s.solver.nu);
  read_if(j, "epsilon", s.solver.tolerance);
  read_if(j, "max_iters", s.solver.max_iters);
  read_if(j, "armijo_max_steps", s.solver.armijo_max_steps);
  read_if(j, "armijo_coeff", s.solver.armijo_coeff);
  read_if(j, "step_init", s.solver.step_init);
  read_if(j, "step_contract", s.solver.step_contract);
  read_if(j, "monotone_rate", s.solver.monotone_rate);
  read_if(j, "restarts", s.solver.restarts);
  if (j.contains("beta_rule")) {
    const auto rule = j.at("beta_rule").get<std::string>();
    if (rule == "pr+") s.solver.beta_rule = BetaRule::PolakRibierePlus;
    else if (rule == "direction") s.solver.beta_rule = BetaRule::DirectionDenominator;
    else throw std::invalid_argument("beta_rule must be 'pr+' or 'direction'");
  }
  if (j.contains("beamformer")) {
    const auto kind = j.at("beamformer").get<std::string>();
    if (kind == "uniform") s.beamformer = BeamformerKind::Uniform;
    else if (kind == "mmse") s.beamformer = BeamformerKind::Mmse;
    else throw std::invalid_argument("beamformer must be 'uniform' or 'mmse'");
  }
  if (j.contains("architecture")) {
    out.architecture = ArchitectureSpec::parse(j.at("architecture").get<std::string>());
    s = out.with_architecture(*out.architecture);
  }
  if (j.contains("links")) {
    const json& links = j.at("links");
    if (!links.is_object()) throw std::invalid_argument("links must be an object");
    reject_unknown(links, {"bs_ris", "ris_users"}, "links");
    if (links.contains("bs_ris")) out.geometry.bs_ris = parse_link(links.at("bs_ris"), "bs_ris");
    if (links.contains("ris_users")) {
      out.geometry.ris_users = parse_link(links.at("ris_users"), "ris_users");
    }
  }
  s.validate();
  return out;
}

json to_json(const ProblemConfig& config) {
  const SystemConfig& s = config.system;
  json j = {
      {"n_tx", s.n_tx},
      {"n_users", s.n_users},
      {"n_elements", s.n_elements},
      {"n_groups", s.n_groups},
      {"p_max", s.p_max},
      {"noise_power", s.noise_power},
      {"nu", s.solver.nu},
      {"epsilon", s.solver.tolerance},
      {"max_iters", s.solver.max_iters},
      {"armijo_max_steps", s.solver.armijo_max_steps},
      {"armijo_coeff", s.solver.armijo_coeff},
      {"step_init", s.solver.step_init},
      {"step_contract", s.solver.step_contract},
      {"monotone_rate", s.solver.monotone_rate},
      {"restarts", s.solver.restarts},
      {"beta_rule", s.solver.beta_rule == BetaRule::PolakRibierePlus ? "pr+" : "direction"},
      {"beamformer", s.beamformer == BeamformerKind::Uniform ? "uniform" : "mmse"},
      {"links",
       {{"bs_ris", link_json(config.geometry.bs_ris)},
        {"ris_users", link_json(config.geometry.ris_users)}}},
  };
  if (config.architecture) j["architecture"] = config.architecture->label;
  return j;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

ProblemConfig load_problem_config(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  try {
    return parse_problem_config(j);
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace bdris
