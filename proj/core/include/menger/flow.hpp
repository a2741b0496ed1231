// Copyright 2026 The Menger Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "menger/assembly.hpp"
#include "menger/energy.hpp"
#include "menger/knot.hpp"

namespace menger {

struct FlowConfig {
  double p = 3.0;
  EnergyKind energy = EnergyKind::ep;
  std::optional<double> lambda;
  int samples = 0;  ///< M; 0 selects default_samples(N)
  int steps = 0;
  double tau_max = 0.01;
  double epsilon = 0.05;
  int redistribute_every = 0;  ///< 0 = never during the flow
  bool initial_redistribution = true;
  int redistribute_samples = 0;  ///< M_poly; 0 selects the grid M
  int log_every = 10;
  int frame_every = 500;
  int max_halvings = 30;

  /// @throws InvalidArgument on inconsistent settings.
  void validate() const;
  int grid_samples(int n_modes) const {
    return samples > 0 ? samples : default_samples(n_modes);
  }
};

struct EigExtremes {
  double min = 0, max = 0;
};

/// Diagnostics of the most recent accepted step.
struct StepInfo {
  double tau = 0;
  int halvings = 0;
  EigExtremes eig_a, eig_b, eig_s;
  double cond_a = 0;  ///< K2(A)
  double cond_s = 0;  ///< K2(A + τB)
};

struct FlowState {
  FourierKnot knot;
  int step = 0;
  double time = 0;
  double last_tau = 0;
  EnergyReport report;
  StepInfo info;
};

/**
 * Largest admissible step for S = A + τB. With
 * T = λB_max λA_min - (1+ε) λA_max λB_min: τ = ε λA_min λA_max / T if T > 0,
 * additionally bounded by λA_min / (-λB_min) when λB_max < 0; τ = τ_max
 * if T <= 0. The result is finally capped at τ_max. This keeps A + τB
 * positive definite with K2(A+τB) <= (1+ε) K2(A).
 *
 * @throws InvalidArgument if eig_a.min <= 0.
 */
double adaptive_tau(EigExtremes eig_a, EigExtremes eig_b, double epsilon,
                    double tau_max);

/// Smallest and largest eigenvalue of a symmetric matrix.
EigExtremes symmetric_eig_extremes(const Eigen::MatrixXd& m);

/**
 * Cholesky solve of S c_l = rhs_l for the three components.
 *
 * @throws FactorizationError if S is not numerically positive definite.
 */
std::array<Eigen::VectorXd, 3> solve_step(const Eigen::MatrixXd& S,
                                          const std::array<Eigen::VectorXd, 3>& rhs);

/// Initial state: energy report of the knot, step 0, time 0.
FlowState make_state(const FourierKnot& knot, const FlowConfig& config);

/**
 * One implicit Euler step. If the new curve cannot be sampled (zero speed,
 * coincident samples) the step is retried with τ halved.
 *
 * @throws FlowAbort after config.max_halvings rejected attempts.
 */
FlowState step(const FlowState& state, const FlowConfig& config);

/// Intermediate data of a redistribution, for inspection.
struct Redistribution {
  FourierKnot knot;
  std::vector<Vec3> polygon;      ///< inscribed polygon γ(2πi/n)
  std::vector<double> arc;        ///< arclength position of each new point
  std::vector<double> params;     ///< parameter of each new point on γ
  std::vector<Vec3> points;       ///< γ(params), the points that get fitted
};

/**
 * Reparametrize towards constant speed: sample an inscribed polygon with
 * M_poly vertices, place M_poly points at equal arclength along it, pull
 * them back to the curve by interpolating parameters linearly within their
 * edges, and fit N_out modes to the result.
 *
 * @throws DegenerateError on a zero-length polygon edge.
 * @throws InvalidArgument if M_poly <= 2 N_out.
 */
Redistribution redistribute_trace(const FourierKnot& knot, int m_poly, int n_out);
FourierKnot redistribute(const FourierKnot& knot, int m_poly, int n_out);

struct FlowObserver {
  /// Called at step 0 and every log_every steps (and after the last step).
  std::function<void(const FlowState&)> on_log;
  /// Called at step 0 and every frame_every steps (and after the last step).
  std::function<void(const FlowState&)> on_frame;
};

struct FlowResult {
  FlowState final_state;
  std::vector<FlowState> log;  ///< states at log events, knots included
};

/**
 * Run config.steps steps from `initial`, redistributing first unless
 * suppressed and every redistribute_every steps.
 *
 * @throws FlowAbort, DegenerateError, FactorizationError from the steps.
 */
FlowResult run_flow(const FourierKnot& initial, const FlowConfig& config,
                    const FlowObserver& observer = {});

}  // namespace menger
