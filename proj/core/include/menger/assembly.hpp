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
#include <optional>
#include <string_view>

#include "menger/energy.hpp"
#include "menger/knot.hpp"
#include "menger/pair_triples.hpp"

namespace menger {

enum class EnergyKind { mp, ep, ep_lambda };

/// "mp", "ep", "ep-lambda" (also accepts "ep_lambda").
EnergyKind parse_energy_kind(std::string_view s);
std::string_view to_string(EnergyKind k);

/**
 * Coefficients of the bilinear form that linearizes δM_p at the current
 * curve. Per-point arrays s1..s4 weight q q, q' q', q'' q'' and
 * (q' q'' + q'' q'); s5 and s7 are symmetric M×M matrices with zero diagonal
 * (only i < j is meaningful) weighting q_i q_j and d_ij d_ij; s6 is a full
 * M×M matrix weighting q'_i d_ij, where d_ij = q_i - q_j.
 *
 * Every entry carries the factor h^3·τ. Stored values are additionally
 * divided by base_max^p; the true tables are stored·exp(log_factor).
 */
struct SigmaTables {
  Eigen::VectorXd s1, s2, s3, s4;
  Eigen::MatrixXd s5, s6, s7;
  double log_factor = 0;
};

/**
 * @throws InvalidArgument if p < 2.
 * @throws DegenerateError on a non-finite entry, naming the index tuple.
 */
SigmaTables build_sigma(const SampleGrid& grid, const PairTriples& pt, double p,
                        double tau);

/**
 * Cosine and sine sums θc[m] = Σ_i σ_i cos(m x_i), θs[m] = Σ_i σ_i sin(m x_i),
 * m = 0..2N, with x_i = 2πi/M. θs[0] is zero and not accumulated.
 */
struct Theta {
  Eigen::VectorXd c, s;
};
Theta build_theta(const Eigen::VectorXd& sigma, int n_modes);

/**
 * Σ_i σ_i q^{(da)}_a(x_i) q^{(db)}_b(x_i) for all basis pairs (a, b),
 * reconstructed from θ via product-to-sum identities. da, db are derivative
 * orders 0..2.
 */
Eigen::MatrixXd theta_contract(const Theta& theta, int n_modes, int da, int db);

/**
 * One implicit step solves (A + τB) c_l = rhs_l for each spatial component l.
 * A is the mass matrix Σ h|p'_i| q_i^a q_i^b, B the τ-free linearization of
 * the chosen energy's first variation, rhs_l = Σ h|p'_i| (p_i)_l q_i^a.
 */
struct SystemMatrices {
  Eigen::MatrixXd A, B;
  std::array<Eigen::VectorXd, 3> rhs;
  EnergyReport report;  ///< energy of the curve the system was built from
};

/**
 * @throws InvalidArgument if the grid has no basis tables, p < 2, or
 * energy_kind is ep_lambda without λ.
 */
SystemMatrices assemble(const SampleGrid& grid, double p, EnergyKind kind,
                        std::optional<double> lambda = std::nullopt);

/// B for M_p alone with tables scaled by base_max^{-p}; the true matrix is
/// result·exp(sigma.log_factor). Exposed for tests and benchmarks.
Eigen::MatrixXd contract_sigma(const SampleGrid& grid, const SigmaTables& sigma);

/// Copy the upper triangle onto the lower one.
void mirror_upper(Eigen::MatrixXd& m);

}  // namespace menger
