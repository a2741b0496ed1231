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
#include <span>
#include <vector>

#include "menger/geometry.hpp"

namespace menger {

/**
 * Closed curve γ(x) = Σ_{k=1..N} a_k cos(kx) + b_k sin(kx), x ∈ [0, 2π).
 * The constant term is always zero, which pins the centroid to the origin.
 *
 * Coefficients are also addressed through a flat index l = 0..2N-1 with
 * l = 2k-2 for a_k and l = 2k-1 for b_k; this is the basis ordering used
 * by the sample tables and the system matrices.
 */
class FourierKnot {
 public:
  /// @throws InvalidArgument if the arrays differ in size, are empty or hold
  /// non-finite values.
  FourierKnot(std::vector<Vec3> cos_coeffs, std::vector<Vec3> sin_coeffs);

  /// Circle of radius r in the xy-plane, stored in mode 1.
  static FourierKnot circle(double r = 1.0, int n_modes = 1);

  /// Build from one coefficient vector (length 2N, flat basis order) per
  /// spatial component.
  static FourierKnot from_components(const Eigen::VectorXd& cx,
                                     const Eigen::VectorXd& cy,
                                     const Eigen::VectorXd& cz);

  int n_modes() const { return static_cast<int>(a_.size()); }
  int n_basis() const { return 2 * n_modes(); }
  const std::vector<Vec3>& cos_coeffs() const { return a_; }
  const std::vector<Vec3>& sin_coeffs() const { return b_; }

  /// Coefficient of basis function l.
  const Vec3& coeff(int l) const { return (l % 2 == 0) ? a_[l / 2] : b_[l / 2]; }

  /// Spatial component c (0, 1, 2) as a flat coefficient vector.
  Eigen::VectorXd component(int c) const;

  /// Largest absolute coefficient difference to another knot with the same
  /// number of modes.
  double max_coeff_diff(const FourierKnot& other) const;

 private:
  std::vector<Vec3> a_, b_;
};

/// Value (order 0) or derivative (order 1, 2) of γ at x.
Vec3 evaluate(const FourierKnot& knot, double x, int order = 0);

/// Multiply every coefficient by r > 0.
FourierKnot scale(const FourierKnot& knot, double r);

/// Default sample count for N modes: max(8N, 64).
int default_samples(int n_modes);

/**
 * M equidistant samples x_i = i·h, h = 2π/M, of a curve: points, first and
 * second derivatives, their speeds |p'_i| and (for Fourier knots) the basis
 * tables q, q', q'' of size M × 2N.
 */
class SampleGrid {
 public:
  /// Grid from raw samples. Basis tables are left empty. Used for polygons
  /// and other curves that do not live in a Fourier space.
  SampleGrid(std::vector<Vec3> points, std::vector<Vec3> d1,
             std::vector<Vec3> d2);

  int m_samples() const { return static_cast<int>(p_.size()); }
  int n_basis() const { return static_cast<int>(q_.cols()); }
  double h() const { return h_; }
  double x(int i) const { return i * h_; }

  const std::vector<Vec3>& points() const { return p_; }
  const std::vector<Vec3>& d1() const { return d1_; }
  const std::vector<Vec3>& d2() const { return d2_; }
  const std::vector<double>& speed() const { return speed_; }
  double min_speed() const { return min_speed_; }

  /// Basis tables, rows = samples, columns = flat basis index.
  const Eigen::MatrixXd& q() const { return q_; }
  const Eigen::MatrixXd& dq() const { return dq_; }
  const Eigen::MatrixXd& ddq() const { return ddq_; }

 private:
  friend SampleGrid build_grid(const FourierKnot&, int);
  SampleGrid() = default;
  void finish();

  double h_ = 0;
  std::vector<Vec3> p_, d1_, d2_;
  std::vector<double> speed_;
  double min_speed_ = 0;
  Eigen::MatrixXd q_, dq_, ddq_;
};

/**
 * Sample a knot on M equidistant parameters and fill the basis tables.
 *
 * @throws InvalidArgument if M < 3.
 * @throws DegenerateError if some |p'_i| = 0.
 */
SampleGrid build_grid(const FourierKnot& knot, int M);

/**
 * Trapezoidal projection c_l = (h/π) Σ_i points[i] φ_l(x_i) onto N modes.
 * Points are taken at x_i = 2πi/M.
 *
 * @throws InvalidArgument if M <= 2N.
 */
FourierKnot fit_fourier(std::span<const Vec3> points, int n_modes);

/**
 * n points spaced evenly by arclength along the closed polygon, starting at
 * vertex 0.
 *
 * @throws DegenerateError on a zero-length edge.
 */
std::vector<Vec3> resample_polygon(std::span<const Vec3> vertices, int n);

/**
 * Fourier knot from a closed polygon: resample to 4N+1 points by arclength,
 * then fit_fourier.
 *
 * @throws InvalidArgument if there are fewer than 2N+2 vertices.
 */
FourierKnot fit_polygon(std::span<const Vec3> vertices, int n_modes);

/**
 * Samples of the closed polygon itself, parametrized proportionally to
 * arclength over [0, 2π): M points evenly spaced along the polygon starting at
 * vertex 0, with the one-sided (forward) edge direction as first derivative
 * and zero second derivative.
 */
SampleGrid build_polygon_grid(std::span<const Vec3> vertices, int M);

}  // namespace menger
