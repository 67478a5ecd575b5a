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

#include "bdris/optimizer.hpp"

#include "bdris/format.hpp"
#include "bdris/gradient.hpp"
#include "bdris/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace bdris {

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::Converged: return "converged";
    case StopReason::MaxIterations: return "max_iterations";
    case StopReason::Stalled: return "stalled";
  }
  return "unknown";
}

ArmijoResult armijo_search(const ScatteringMatrix& theta,
                           const TangentVector& direction, double slope,
                           double f0, const FpState& fp,
                           const ChannelSet& channels, const Beamformer& beam,
                           const SystemConfig& config, double rate_floor) {
  const CgaSettings& s = config.solver;
  ArmijoResult out{0.0, theta, f0, 0};
  if (direction.is_zero()) return out;

  double alpha = s.step_init;
  for (int m = 0; m < s.armijo_max_steps; ++m, alpha *= s.step_contract) {
    ++out.trials;
    ScatteringMatrix candidate;
    try {
      candidate = retract(theta, direction, alpha);
    } catch (const RetractionError&) {
      continue;
    }
    const double f = penalized_objective(candidate, fp, channels, beam, config);
    const double gain = f - f0;
    if (gain > 0.0 && gain >= s.armijo_coeff * alpha * slope &&
        sum_rate(candidate, channels, beam, config.noise_power) >= rate_floor) {
      out.alpha = alpha;
      out.theta = std::move(candidate);
      out.objective = f;
      return out;
    }
  }
  return out;
}

namespace {

struct Evaluation {
  FpState fp;
  double surrogate = 0.0;
  double rate = 0.0;
  TangentVector riemannian_grad;
};

// Refreshes the auxiliaries at theta, then evaluates the surrogate, the
// true rate and the Riemannian gradient there.
Evaluation evaluate(const ScatteringMatrix& theta, const ChannelSet& channels,
                    const Beamformer& beam, const SystemConfig& config) {
  const EquivalentChannel eq = equivalent_channel(theta, channels);
  Evaluation ev;
  ev.fp = refresh_fp(eq, beam, config.noise_power);
  ev.surrogate = surrogate_sum(ev.fp, eq, beam, config.noise_power) -
                 config.solver.nu * penalty(theta);
  ev.rate = sum_rate(eq, beam, config.noise_power);
  ev.riemannian_grad = tangent_project(
      euclidean_gradient(theta, ev.fp, channels, beam, config), theta);
  return ev;
}

}  // namespace

CgaResult cga_optimize_from(const ScatteringMatrix& start,
                            const ChannelSet& channels, const Beamformer& beam,
                            const SystemConfig& config) {
  config.validate();
  const CgaSettings& s = config.solver;

  ScatteringMatrix theta = start;
  Evaluation ev = evaluate(theta, channels, beam, config);
  TangentVector direction = ev.riemannian_grad;
  bool steepest = true;

  OptimizerTrace trace;
  trace.initial_rate = ev.rate;
  trace.records.push_back({0, ev.rate, ev.surrogate, 0.0,
                           std::sqrt(inner(ev.riemannian_grad, ev.riemannian_grad)),
                           0.0, 0.0, unitarity_residual(theta)});

  for (int iter = 1; iter <= s.max_iters; ++iter) {
    trace.iters_used = iter;
    double slope = inner(ev.riemannian_grad, direction);
    if (slope <= 0.0) {
      direction = ev.riemannian_grad;
      slope = inner(ev.riemannian_grad, direction);
      steepest = true;
    }

    const double floor = s.monotone_rate
                             ? ev.rate
                             : -std::numeric_limits<double>::infinity();
    ArmijoResult step = armijo_search(theta, direction, slope, ev.surrogate,
                                      ev.fp, channels, beam, config, floor);
    if (step.alpha == 0.0) {
      // A repeat with the same direction would stall identically, so the
      // first stall falls back to the gradient and a second one stops.
      if (steepest) {
        trace.reason = StopReason::Stalled;
        break;
      }
      direction = ev.riemannian_grad;
      steepest = true;
      continue;
    }
    const double armijo_gain = step.objective - ev.surrogate;
    theta = std::move(step.theta);

    Evaluation next = evaluate(theta, channels, beam, config);
    const TangentVector& r_old = ev.riemannian_grad;
    const TangentVector& r_new = next.riemannian_grad;
    const double numerator = inner(r_new, r_new) - inner(r_new, r_old);
    const double denominator = s.beta_rule == BetaRule::PolakRibierePlus
                                   ? inner(r_old, r_old)
                                   : slope;
    const double beta =
        denominator > 0.0 ? std::max(0.0, numerator / denominator) : 0.0;

    TangentVector transported = tangent_project(direction, theta);
    direction = r_new;
    if (beta > 0.0) direction += beta * std::move(transported);
    steepest = beta == 0.0;

    const double previous_rate = ev.rate;
    ev = std::move(next);
    trace.records.push_back({iter, ev.rate, ev.surrogate, step.alpha,
                             std::sqrt(inner(ev.riemannian_grad, ev.riemannian_grad)),
                             beta, armijo_gain, unitarity_residual(theta)});

    if (std::abs(ev.rate - previous_rate) < s.tolerance) {
      trace.converged = true;
      trace.reason = StopReason::Converged;
      break;
    }
  }

  CgaResult out;
  out.theta_raw = theta;
  out.theta = project_symmetric_unitary(theta);
  trace.final_rate = ev.rate;
  trace.projected_rate = sum_rate(out.theta, channels, beam, config.noise_power);
  const FeasibilityReport report = validate_feasibility(out.theta, 0.0, 0.0);
  trace.symmetry_residual = report.max_symmetry;
  trace.unitarity_residual = report.max_unitarity;
  out.trace = std::move(trace);
  return out;
}

CgaResult cga_optimize(const ChannelSet& channels, const Beamformer& beam,
                       const SystemConfig& config, std::uint64_t seed) {
  CgaResult best = cga_optimize_from(random_feasible(config, seed), channels,
                                     beam, config);
  for (int r = 1; r < config.solver.restarts; ++r) {
    CgaResult next = cga_optimize_from(
        random_feasible(config, mix_seed(seed, static_cast<std::uint64_t>(r))),
        channels, beam, config);
    if (next.trace.projected_rate > best.trace.projected_rate) {
      best = std::move(next);
    }
  }
  return best;
}

Beamformer design_beamformer(const SystemConfig& config,
                             const ChannelSet& channels, std::uint64_t seed) {
  if (config.beamformer == BeamformerKind::Uniform) {
    return init_beamformer_uniform(config);
  }
  // A diagonal-phase surface, so every architecture gets the same precoder.
  const ScatteringMatrix phases = random_feasible(config.n_elements, 1, seed);
  return init_beamformer_mmse(equivalent_channel(phases, channels), config);
}

void write_trace_csv(std::ostream& os, const OptimizerTrace& trace) {
  os << "iter,eta,eta_breve,alpha,grad_norm,beta\n";
  for (const auto& r : trace.records) {
    os << r.iter << ',' << format_double(r.true_rate) << ','
       << format_double(r.surrogate) << ',' << format_double(r.step) << ','
       << format_double(r.grad_norm) << ',' << format_double(r.beta) << '\n';
  }
}

}  // namespace bdris
