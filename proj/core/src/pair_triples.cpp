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

#include "menger/pair_triples.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "menger/errors.hpp"
#include "menger/parallel.hpp"

namespace menger {

std::size_t triple_index(int i, int j, int k) {
  if (!(0 <= i && i < j && j < k))
    throw InvalidArgument("triple_index: need 0 <= i < j < k, got (" +
                          std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")");
  return detail::tri(i, j, k);
}

std::size_t pair_index(int i, int j) {
  if (!(0 <= i && i <= j))
    throw InvalidArgument("pair_index: need 0 <= i <= j, got (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
  return detail::pair(i, j);
}

double pow_nonneg(double r, double e) {
  if (e == 0.0) return 1.0;
  if (r == 0.0) return 0.0;
  if (e > 0 && e <= 64 && e == std::floor(e)) {
    unsigned n = static_cast<unsigned>(e);
    double result = 1.0, b = r;
    while (n) {
      if (n & 1u) result *= b;
      b *= b;
      n >>= 1;
    }
    return result;
  }
  return std::exp(e * std::log(r));
}

PairTriples::PairTriples(const SampleGrid& grid) : m_(grid.m_samples()) {
  const int M = m_;
  const auto& p = grid.points();
  const auto& d1 = grid.d1();
  const auto& d2 = grid.d2();
  const auto& sp = grid.speed();

  dp_.assign(pair_count(M), Vec3{});
  dist_.assign(pair_count(M), 0.0);
  for (int j = 0; j < M; ++j)
    for (int i = 0; i < j; ++i) {
      const std::size_t t = detail::pair(i, j);
      dp_[t] = p[i] - p[j];
      dist_[t] = norm(dp_[t]);
      if (dist_[t] == 0.0)
        throw DegenerateError("samples " + std::to_string(i) + " and " +
                              std::to_string(j) + " coincide");
    }

  x2_.resize(M);
  base1_.resize(M);
  double bmax = 0;
  for (int i = 0; i < M; ++i) {
    x2_[i] = wedge(d1[i], d2[i]);
    base1_[i] = norm(x2_[i]) / (sp[i] * sp[i] * sp[i]);
    bmax = std::max(bmax, base1_[i]);
  }

  x1_.resize(static_cast<std::size_t>(M) * M);
  base2_.assign(static_cast<std::size_t>(M) * M, 0.0);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      if (i == j) continue;
      const std::size_t t = static_cast<std::size_t>(i) * M + j;
      x1_[t] = wedge(p[i] - p[j], d1[i]);
      const double d = dist_any(i, j);
      base2_[t] = 2.0 * norm(x1_[t]) / (d * d * sp[i]);
      bmax = std::max(bmax, base2_[t]);
    }

  x0_.resize(triple_count(M));
  base3_.resize(triple_count(M));
  const auto bounds = triple_block_bounds(M, kTripleBlocks);
  std::vector<double> block_max(kTripleBlocks, 0.0);
  parallel_blocks(kTripleBlocks, [&](int b) {
    double mx = 0;
    for (int k = bounds[b]; k < bounds[b + 1]; ++k)
      for (int j = 1; j < k; ++j) {
        const double djk = dist(j, k);
        for (int i = 0; i < j; ++i) {
          const std::size_t t = detail::tri(i, j, k);
          // (p_j - p_i) ∧ (p_k - p_i) = dp_ij ∧ dp_ik.
          const double x = norm(wedge(dp(i, j), dp(i, k)));
          x0_[t] = x;
          base3_[t] = 2.0 * x / (dist(i, j) * djk * dist(i, k));
          mx = std::max(mx, base3_[t]);
        }
      }
    block_max[b] = mx;
  });
  base3_max_ = *std::max_element(block_max.begin(), block_max.end());
  base_max_ = std::max(bmax, base3_max_);
  if (!std::isfinite(base_max_))
    throw DegenerateError("non-finite circumradius value on the grid");
}

}  // namespace menger
