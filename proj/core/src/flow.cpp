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

#include "menger/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "menger/errors.hpp"

namespace menger {

void FlowConfig::validate() const {
  if (!(p >= 2.0) || !std::isfinite(p)) throw InvalidArgument("p must be >= 2");
  if (energy == EnergyKind::ep_lambda && !lambda)
    throw InvalidArgument("energy ep-lambda requires lambda");
  if (lambda && !(*lambda >= 0.0)) throw InvalidArgument("lambda must be >= 0");
  if (samples != 0 && samples < 3) throw InvalidArgument("samples must be >= 3");
  if (steps < 0) throw InvalidArgument("steps must be >= 0");
  if (!(tau_max >= 0.0)) throw InvalidArgument("tau_max must be >= 0");
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be > 0");
  if (redistribute_every < 0) throw InvalidArgument("redistribute_every must be >= 0");
  if (redistribute_samples != 0 && redistribute_samples < 3)
    throw InvalidArgument("redistribute_samples must be >= 3");
  if (log_every < 1 || frame_every < 1)
    throw InvalidArgument("log_every and frame_every must be >= 1");
  if (max_halvings < 0) throw InvalidArgument("max_halvings must be >= 0");
}

double adaptive_tau(EigExtremes a, EigExtremes b, double epsilon, double tau_max) {
  if (!(a.min > 0.0))
    throw InvalidArgument("adaptive_tau: A is not positive definite (lambda_min = " +
                          std::to_string(a.min) + ")");
  const double T = b.max * a.min - (1.0 + epsilon) * a.max * b.min;
  double tau = tau_max;
  if (T > 0.0) {
    tau = epsilon * a.min * a.max / T;
    if (b.max < 0.0) tau = std::min(tau, a.min / (-b.min));
  }
  return std::min(tau, tau_max);
}

EigExtremes symmetric_eig_extremes(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.minCoeff(), ev.maxCoeff()};
}

std::array<Eigen::VectorXd, 3> solve_step(const Eigen::MatrixXd& S,
                                          const std::array<Eigen::VectorXd, 3>& rhs) {
  Eigen::LLT<Eigen::MatrixXd> llt(S);
  if (llt.info() != Eigen::Success)
    throw FactorizationError("solve_step: system matrix is not positive definite");
  return {llt.solve(rhs[0]), llt.solve(rhs[1]), llt.solve(rhs[2])};
}

namespace {

std::optional<double> report_lambda(const FlowConfig& c) {
  return c.lambda;
}

}  // namespace

FlowState make_state(const FourierKnot& knot, const FlowConfig& config) {
  config.validate();
  const SampleGrid grid = build_grid(knot, config.grid_samples(knot.n_modes()));
  return FlowState{knot, 0, 0.0, 0.0, energy_report(grid, config.p, report_lambda(config)),
                   {}};
}

FlowState step(const FlowState& state, const FlowConfig& config) {
  const int M = config.grid_samples(state.knot.n_modes());
  const SampleGrid grid = build_grid(state.knot, M);
  const SystemMatrices sys = assemble(grid, config.p, config.energy, config.lambda);

  StepInfo info;
  info.eig_a = symmetric_eig_extremes(sys.A);
  info.eig_b = symmetric_eig_extremes(sys.B);
  info.cond_a = info.eig_a.max / info.eig_a.min;
  double tau = adaptive_tau(info.eig_a, info.eig_b, config.epsilon, config.tau_max);

  for (int attempt = 0; attempt <= config.max_halvings; ++attempt, tau *= 0.5) {
    const Eigen::MatrixXd S = sys.A + tau * sys.B;
    info.tau = tau;
    info.halvings = attempt;
    info.eig_s = symmetric_eig_extremes(S);
    info.cond_s = info.eig_s.max / info.eig_s.min;
    if (tau == 0.0) {
      // Nothing moves; skip the solve so the coefficients stay bitwise equal.
      FlowState next = state;
      next.step = state.step + 1;
      next.last_tau = 0.0;
      next.info = info;
      return next;
    }
    const auto c = solve_step(S, sys.rhs);
    try {
      FourierKnot knot = FourierKnot::from_components(c[0], c[1], c[2]);
      const SampleGrid g = build_grid(knot, M);
      EnergyReport report = energy_report(g, config.p, report_lambda(config));
      if (!std::isfinite(report.ep)) throw DegenerateError("non-finite energy");
      return FlowState{std::move(knot), state.step + 1, state.time + tau, tau,
                       std::move(report), info};
    } catch (const DegenerateError&) {
    } catch (const InvalidArgument&) {
      // Non-finite coefficients.
    }
  }
  throw FlowAbort("step " + std::to_string(state.step + 1) + ": no admissible step after " +
                  std::to_string(config.max_halvings) + " halvings of tau");
}

Redistribution redistribute_trace(const FourierKnot& knot, int m_poly, int n_out) {
  if (m_poly < 3) throw InvalidArgument("redistribute: need M_poly >= 3");
  if (m_poly <= 2 * n_out)
    throw InvalidArgument("redistribute: need M_poly > 2 N_out");
  const double h = 2.0 * std::numbers::pi / m_poly;
  Redistribution r{knot, {}, {}, {}, {}};
  r.polygon.resize(m_poly);
  for (int i = 0; i < m_poly; ++i) r.polygon[i] = evaluate(knot, i * h);

  std::vector<double> s(m_poly + 1, 0.0);
  for (int i = 0; i < m_poly; ++i) {
    const double e = norm(r.polygon[(i + 1) % m_poly] - r.polygon[i]);
    if (e == 0.0)
      throw DegenerateError("redistribute: polygon edge " + std::to_string(i) +
                            " has zero length");
    s[i + 1] = s[i] + e;
  }
  const double L = s.back();

  r.arc.resize(m_poly);
  r.params.resize(m_poly);
  r.points.resize(m_poly);
  std::size_t e = 0;
  for (int j = 0; j < m_poly; ++j) {
    const double pos = L * j / m_poly;
    while (e + 1 < static_cast<std::size_t>(m_poly) && s[e + 1] <= pos) ++e;
    const double t = (pos - s[e]) / (s[e + 1] - s[e]);
    r.arc[j] = pos;
    r.params[j] = (static_cast<double>(e) + t) * h;
    r.points[j] = evaluate(knot, r.params[j]);
  }
  r.knot = fit_fourier(r.points, n_out);
  return r;
}

FourierKnot redistribute(const FourierKnot& knot, int m_poly, int n_out) {
  return redistribute_trace(knot, m_poly, n_out).knot;
}

FlowResult run_flow(const FourierKnot& initial, const FlowConfig& config,
                    const FlowObserver& observer) {
  config.validate();
  const int N = initial.n_modes();
  const int M = config.grid_samples(N);
  const int m_poly = config.redistribute_samples > 0 ? config.redistribute_samples : M;

  FourierKnot knot = config.initial_redistribution ? redistribute(initial, m_poly, N) : initial;
  FlowResult result{make_state(knot, config), {}};
  FlowState& state = result.final_state;

  auto log = [&] {
    result.log.push_back(state);
    if (observer.on_log) observer.on_log(state);
  };
  log();
  if (observer.on_frame) observer.on_frame(state);

  for (int s = 1; s <= config.steps; ++s) {
    state = step(state, config);
    if (config.redistribute_every > 0 && s % config.redistribute_every == 0) {
      FlowState redone = make_state(redistribute(state.knot, m_poly, N), config);
      redone.step = state.step;
      redone.time = state.time;
      redone.last_tau = state.last_tau;
      redone.info = state.info;
      state = std::move(redone);
    }
    const bool last = s == config.steps;
    if (s % config.log_every == 0 || last) log();
    if ((s % config.frame_every == 0 || last) && observer.on_frame) observer.on_frame(state);
  }
  return result;
}

}  // namespace menger
