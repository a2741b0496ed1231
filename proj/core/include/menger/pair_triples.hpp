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

#include <cstddef>
#include <vector>

#include "menger/knot.hpp"

namespace menger {

/// Linear index of the triple i < j < k: i + (j-1)j/2 + (k-2)(k-1)k/6.
/// @throws InvalidArgument unless 0 <= i < j < k.
std::size_t triple_index(int i, int j, int k);

/// Linear index of the pair i <= j: i + j(j+1)/2.
/// @throws InvalidArgument unless 0 <= i <= j.
std::size_t pair_index(int i, int j);

/// Number of strict triples i < j < k < M: (M-2)(M-1)M/6.
constexpr std::size_t triple_count(int M) {
  return M < 3 ? 0
               : static_cast<std::size_t>(M - 2) * (M - 1) * M / 6;
}
/// Number of pairs i <= j < M.
constexpr std::size_t pair_count(int M) {
  return static_cast<std::size_t>(M) * (M + 1) / 2;
}

namespace detail {
inline std::size_t tri(int i, int j, int k) {
  return static_cast<std::size_t>(i) + static_cast<std::size_t>(j - 1) * j / 2 +
         static_cast<std::size_t>(k - 2) * (k - 1) * k / 6;
}
inline std::size_t pair(int i, int j) {
  return static_cast<std::size_t>(i) + static_cast<std::size_t>(j) * (j + 1) / 2;
}
}  // namespace detail

/**
 * Pairwise and triple quantities of one sample grid, stored once and shared
 * by the energy, variation and assembly loops.
 *
 * Besides the raw wedge norms it keeps the three kinds of integrand values
 * ("bases") of the discrete triple sum:
 *  - base3 = 2|X0_ijk| / (|dp_ij||dp_jk||dp_ik|), strict triples;
 *  - base2(i,j) = 2|X1_ij| / (|dp_ij|^2 |p'_i|), the two-point value
 *    with the tangent taken at i;
 *  - base1(i) = |X2_i| / |p'_i|^3, the curvature.
 * base_max is the largest of all of them. Powers are formed from
 * base/base_max, which keeps b^p representable for large p.
 */
class PairTriples {
 public:
  /// @throws DegenerateError if two samples coincide or a value is not finite.
  explicit PairTriples(const SampleGrid& grid);

  int m() const { return m_; }

  /// p_i - p_j for i < j, and its norm.
  const Vec3& dp(int i, int j) const { return dp_[detail::pair(i, j)]; }
  double dist(int i, int j) const { return dist_[detail::pair(i, j)]; }
  /// Symmetric distance lookup for i != j.
  double dist_any(int i, int j) const { return i < j ? dist(i, j) : dist(j, i); }

  /// |(p_j - p_i) ∧ (p_k - p_i)| for i < j < k.
  double x0(int i, int j, int k) const { return x0_[detail::tri(i, j, k)]; }
  /// X1_ij = (p_i - p_j) ∧ p'_i, any i != j.
  const Vec3& x1(int i, int j) const { return x1_[static_cast<std::size_t>(i) * m_ + j]; }
  /// X2_i = p'_i ∧ p''_i.
  const Vec3& x2(int i) const { return x2_[i]; }

  double base3(int i, int j, int k) const { return base3_[detail::tri(i, j, k)]; }
  double base2(int i, int j) const { return base2_[static_cast<std::size_t>(i) * m_ + j]; }
  double base1(int i) const { return base1_[i]; }
  double base_max() const { return base_max_; }
  /// Largest base3; its inverse is the discrete thickness.
  double base3_max() const { return base3_max_; }

  const std::vector<double>& base3_store() const { return base3_; }

 private:
  int m_;
  std::vector<Vec3> dp_;
  std::vector<double> dist_;
  std::vector<double> x0_;
  std::vector<Vec3> x1_, x2_;
  std::vector<double> base3_, base2_, base1_;
  double base_max_ = 0, base3_max_ = 0;
};

/**
 * r^e for r >= 0 with 0^0 = 1 and 0^e = 0 for e > 0. Integral exponents up to
 * 64 use repeated squaring; other exponents use exp(e ln r).
 */
double pow_nonneg(double r, double e);

}  // namespace menger
