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

#include "menger/variation.hpp"

#include <cmath>
#include <numbers>

#include "menger/errors.hpp"
#include "menger/parallel.hpp"

namespace menger {

DirectionSamples sample_direction(const FourierKnot& phi, int M) {
  DirectionSamples s;
  s.p.resize(M);
  s.d1.resize(M);
  s.d2.resize(M);
  const double h = 2.0 * std::numbers::pi / M;
  for (int i = 0; i < M; ++i) {
    s.p[i] = evaluate(phi, i * h, 0);
    s.d1[i] = evaluate(phi, i * h, 1);
    s.d2[i] = evaluate(phi, i * h, 2);
  }
  return s;
}

double delta_length(const SampleGrid& grid, const DirectionSamples& phi) {
  double s = 0;
  for (int i = 0; i < grid.m_samples(); ++i)
    s += dot(grid.d1()[i], phi.d1[i]) / grid.speed()[i];
  return grid.h() * s;
}

double delta_length(const SampleGrid& grid, const FourierKnot& phi) {
  return delta_length(grid, sample_direction(phi, grid.m_samples()));
}

ScaledSum delta_menger_sum(const SampleGrid& grid, const PairTriples& pt,
                           const DirectionSamples& phi, double p) {
  const int M = grid.m_samples();
  if (static_cast<int>(phi.p.size()) != M)
    throw InvalidArgument("delta_menger_sum: direction sampled on a different grid");
  const auto& P = grid.points();
  const auto& D1 = grid.d1();
  const auto& D2 = grid.d2();
  const auto& sp = grid.speed();
  const auto& F = phi.p;
  const auto& F1 = phi.d1;
  const auto& F2 = phi.d2;
  const double bmax = pt.base_max();
  if (bmax == 0.0) return {};
  const double inv = 1.0 / bmax;
  const double inv2 = inv * inv;

  // g_i = p'_i·Φ'_i / |p'_i|^2, the relative change of |p'_i|.
  std::vector<double> g(M);
  for (int i = 0; i < M; ++i) g[i] = dot(D1[i], F1[i]) / (sp[i] * sp[i]);

  const auto bounds = triple_block_bounds(M, kTripleBlocks);
  std::vector<double> partial(kTripleBlocks, 0.0);
  parallel_blocks(kTripleBlocks, [&](int b) {
    double acc = 0;
    for (int k = bounds[b]; k < bounds[b + 1]; ++k)
      for (int j = 1; j < k; ++j) {
        const double djk = pt.dist(j, k);
        const Vec3 w = P[k] - P[j];
        const Vec3 W = F[k] - F[j];
        const double wW = dot(w, W) / (djk * djk);
        for (int i = 0; i < j; ++i) {
          const double rho = pt.base3(i, j, k) * inv;
          const double rp2 = pow_nonneg(rho, p - 2.0);
          const double rp = rp2 * rho * rho;
          const double dij = pt.dist(i, j), dik = pt.dist(i, k);
          const Vec3 u = P[j] - P[i], v = P[k] - P[i];
          const Vec3 U = F[j] - F[i], V = F[k] - F[i];
          const double uU = dot(u, U), vV = dot(v, V), uv = dot(u, v);
          // Half the derivative of |u ∧ v|^2.
          const double dX = dik * dik * uU + dij * dij * vV - uv * (dot(v, U) + dot(u, V));
          const double ddd = dij * djk * dik;
          const double sum_d = uU / (dij * dij) + vV / (dik * dik) + wW;
          acc += sp[i] * sp[j] * sp[k] *
                 (rp * (g[i] + g[j] + g[k] - p * sum_d) +
                  4.0 * p * rp2 * inv2 * dX / (ddd * ddd));
        }
      }
    partial[b] = acc;
  });
  double strict = 0;
  for (double v : partial) strict += v;

  // Two-point terms, tangent at t.
  double two = 0;
  for (int t = 0; t < M; ++t)
    for (int s = 0; s < M; ++s) {
      if (s == t) continue;
      const double d = pt.dist_any(s, t);
      const double d2 = d * d;
      const double rho = pt.base2(t, s) * inv;
      const double rp2 = pow_nonneg(rho, p - 2.0);
      const double rp = rp2 * rho * rho;
      const Vec3 D = P[t] - P[s];
      const Vec3 DF = F[t] - F[s];
      const double DDF = dot(D, DF);
      const double Y = sp[t] * sp[t] * DDF + d2 * dot(D1[t], F1[t]) -
                       dot(D, D1[t]) * (dot(D1[t], DF) + dot(D, F1[t]));
      two += rp * sp[s] * sp[t] * sp[t] * (g[s] + (2.0 - p) * g[t] - 2.0 * p * DDF / d2) +
             4.0 * p * rp2 * inv2 * sp[s] * Y / (d2 * d2);
    }

  double one = 0;
  for (int i = 0; i < M; ++i) {
    const double rho = pt.base1(i) * inv;
    const double rp2 = pow_nonneg(rho, p - 2.0);
    const double rp = rp2 * rho * rho;
    const double s = sp[i];
    const double Y = s * s * dot(D2[i], F2[i]) + norm2(D2[i]) * dot(D1[i], F1[i]) -
                     dot(D1[i], D2[i]) * (dot(D1[i], F2[i]) + dot(D2[i], F1[i]));
    one += rp * s * s * s * (3.0 - 3.0 * p) * g[i] + p * rp2 * inv2 * Y / (s * s * s);
  }

  const double h = grid.h();
  const double value = h * h * h * (6.0 * strict + 3.0 * two + one);
  if (!std::isfinite(value)) throw DegenerateError("delta_menger_sum: non-finite value");
  return {value, p * std::log(bmax)};
}

double delta_mp(const SampleGrid& grid, const FourierKnot& phi, double p) {
  PairTriples pt(grid);
  return delta_menger_sum(grid, pt, sample_direction(phi, grid.m_samples()), p).full();
}

double delta_ep(const SampleGrid& grid, const FourierKnot& phi, double p) {
  PairTriples pt(grid);
  const auto dir = sample_direction(phi, grid.m_samples());
  const ScaledSum m = menger_sum(grid, pt, p);
  const ScaledSum dm = delta_menger_sum(grid, pt, dir, p);
  const double L = length(grid);
  const double dL = delta_length(grid, dir);
  // (M/L^3)^{1/p} with M = value·bmax^p.
  const double root = std::exp(m.log() / p - 3.0 / p * std::log(L));
  return root * (L / p * (dm.value / m.value) + (p - 3.0) / p * dL);
}

double delta_ep_lambda(const SampleGrid& grid, const FourierKnot& phi, double p,
                       double lambda) {
  PairTriples pt(grid);
  const auto dir = sample_direction(phi, grid.m_samples());
  const ScaledSum m = menger_sum(grid, pt, p);
  const ScaledSum dm = delta_menger_sum(grid, pt, dir, p);
  // (1/p) M^{1/p} δM/M.
  return std::exp(m.log() / p) / p * (dm.value / m.value) +
         lambda * delta_length(grid, dir);
}

}  // namespace menger
