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

#include <optional>

#include "menger/knot.hpp"
#include "menger/pair_triples.hpp"

namespace menger {

/**
 * A quantity kept as value·exp(log_factor), so that the M_p sums and their
 * variations stay representable for large p.
 */
struct ScaledSum {
  double value = 0;
  double log_factor = 0;

  /// value·exp(log_factor); may overflow to inf.
  double full() const;
  /// ln(full()) for value > 0, -inf otherwise.
  double log() const;
};

struct EnergyReport {
  double p = 0;
  double length = 0;
  double mp = 0;      ///< may be inf for very large p; see log_mp
  double log_mp = 0;  ///< ln M_p, finite whenever M_p > 0
  double ep = 0;
  double thickness = 0;
  std::optional<double> lambda;
  std::optional<double> ep_lambda;
};

/// Discrete length h Σ |p'_i|.
double length(const SampleGrid& grid);

/**
 * Integrand of the triple sum on a coincidence diagonal: for i != j the
 * two-point value c(i,j,j) = 2|(p_j - p_i) ∧ p'_j| / (|p_j - p_i|^2 |p'_j|),
 * for i = j the curvature at i.
 *
 * @throws DegenerateError if p_i = p_j for i != j.
 */
double diagonal_c(const SampleGrid& grid, int i, int j);

/**
 * h^3 Σ_{i,j,k} c(i,j,k)^p |p'_i||p'_j||p'_k| over all M^3 index triples,
 * evaluated as strict triples (×6) plus two-point diagonals (×3) plus the
 * curvature diagonal. Result is value·b_max^p with b_max = pt.base_max().
 */
ScaledSum menger_sum(const SampleGrid& grid, const PairTriples& pt, double p);

/// Discrete M_p. @throws InvalidArgument if p < 2.
double energy_mp(const SampleGrid& grid, double p);

/// M_p^{1/p} L^{(p-3)/p}, evaluated in log space.
double energy_ep(const SampleGrid& grid, double p);

/// M_p^{1/p} + λ L.
double energy_ep_lambda(const SampleGrid& grid, double p, double lambda);

/**
 * λ for which the circle of radius r is stationary for M_p^{1/p} + λL:
 * (2π)^{(3-p)/p} ((p-3)/p) r^{(3-2p)/p}.
 *
 * @throws InvalidArgument unless p > 3 and r > 0.
 */
double lambda_for_target_radius(double p, double r);

/// Inverse of lambda_for_target_radius in r.
double radius_for_lambda(double p, double lambda);

/// Minimum circumradius over all sample triples, diagonal limits included
/// (two-point values and curvature).
double thickness(const SampleGrid& grid);

/// All of the above in one O(M^3) pass.
EnergyReport energy_report(const SampleGrid& grid, double p,
                           std::optional<double> lambda = std::nullopt);
EnergyReport energy_report(const SampleGrid& grid, const PairTriples& pt, double p,
                           std::optional<double> lambda = std::nullopt);

}  // namespace menger
