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

#include "menger/energy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "menger/errors.hpp"
#include "menger/parallel.hpp"

namespace menger {

double ScaledSum::full() const {
  return value == 0.0 ? 0.0 : value * std::exp(log_factor);
}

double ScaledSum::log() const {
  return value <= 0.0 ? -std::numeric_limits<double>::infinity()
                      : std::log(value) + log_factor;
}

double length(const SampleGrid& grid) {
  double s = 0;
  for (double v : grid.speed()) s += v;
  return grid.h() * s;
}

double diagonal_c(const SampleGrid& grid, int i, int j) {
  const int M = grid.m_samples();
  if (i < 0 || j < 0 || i >= M || j >= M)
    throw InvalidArgument("diagonal_c: index out of range");
  if (i == j) return local_curvature(grid.d1()[i], grid.d2()[i]);
  const Vec3 d = grid.points()[j] - grid.points()[i];
  const double dd = norm2(d);
  if (dd == 0.0)
    throw DegenerateError("diagonal_c: samples " + std::to_string(i) + " and " +
                          std::to_string(j) + " coincide");
  return 2.0 * norm(wedge(d, grid.d1()[j])) / (dd * grid.speed()[j]);
}

namespace {

void check_p(double p) {
  if (!(p >= 2.0) || !std::isfinite(p))
    throw InvalidArgument("energy: p must be a finite number >= 2");
}

}  // namespace

ScaledSum menger_sum(const SampleGrid& grid, const PairTriples& pt, double p) {
  check_p(p);
  const int M = grid.m_samples();
  const auto& sp = grid.speed();
  const double bmax = pt.base_max();
  if (bmax == 0.0) return {};
  const double inv = 1.0 / bmax;

  const auto bounds = triple_block_bounds(M, kTripleBlocks);
  std::vector<double> partial(kTripleBlocks, 0.0);
  parallel_blocks(kTripleBlocks, [&](int b) {
    double s = 0;
    for (int k = bounds[b]; k < bounds[b + 1]; ++k)
      for (int j = 1; j < k; ++j) {
        const double sjk = sp[j] * sp[k];
        for (int i = 0; i < j; ++i)
          s += pow_nonneg(pt.base3(i, j, k) * inv, p) * sp[i] * sjk;
      }
    partial[b] = s;
  });
  double strict = 0;
  for (double v : partial) strict += v;

  double two = 0;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j)
      if (i != j) two += pow_nonneg(pt.base2(i, j) * inv, p) * sp[j] * sp[i] * sp[i];

  double one = 0;
  for (int i = 0; i < M; ++i)
    one += pow_nonneg(pt.base1(i) * inv, p) * sp[i] * sp[i] * sp[i];

  const double h = grid.h();
  const double value = h * h * h * (6.0 * strict + 3.0 * two + one);
  if (!std::isfinite(value)) throw DegenerateError("menger_sum: non-finite value");
  return {value, p * std::log(bmax)};
}

double energy_mp(const SampleGrid& grid, double p) {
  check_p(p);
  PairTriples pt(grid);
  return menger_sum(grid, pt, p).full();
}

double energy_ep(const SampleGrid& grid, double p) {
  return energy_report(grid, p).ep;
}

double energy_ep_lambda(const SampleGrid& grid, double p, double lambda) {
  return *energy_report(grid, p, lambda).ep_lambda;
}

double lambda_for_target_radius(double p, double r) {
  if (!(p > 3.0)) throw InvalidArgument("lambda_for_target_radius: need p > 3");
  if (!(r > 0.0)) throw InvalidArgument("lambda_for_target_radius: need r > 0");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return std::pow(two_pi, (3.0 - p) / p) * ((p - 3.0) / p) *
         std::pow(r, (3.0 - 2.0 * p) / p);
}

double radius_for_lambda(double p, double lambda) {
  if (!(p > 3.0)) throw InvalidArgument("radius_for_lambda: need p > 3");
  if (!(lambda > 0.0)) throw InvalidArgument("radius_for_lambda: need lambda > 0");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return std::pow(std::pow(two_pi, (p - 3.0) / p) * (p / (p - 3.0)) * lambda,
                  p / (3.0 - 2.0 * p));
}

double thickness(const SampleGrid& grid) {
  PairTriples pt(grid);
  return pt.base_max() > 0 ? 1.0 / pt.base_max() : std::numeric_limits<double>::infinity();
}

EnergyReport energy_report(const SampleGrid& grid, const PairTriples& pt, double p,
                           std::optional<double> lambda) {
  check_p(p);
  if (lambda && !(*lambda >= 0.0))
    throw InvalidArgument("energy: lambda must be nonnegative");
  EnergyReport r;
  r.p = p;
  r.length = length(grid);
  const ScaledSum s = menger_sum(grid, pt, p);
  r.mp = s.full();
  r.log_mp = s.log();
  r.ep = std::exp(r.log_mp / p + (p - 3.0) / p * std::log(r.length));
  r.thickness =
      pt.base_max() > 0 ? 1.0 / pt.base_max() : std::numeric_limits<double>::infinity();
  if (lambda) {
    r.lambda = lambda;
    r.ep_lambda = std::exp(r.log_mp / p) + *lambda * r.length;
  }
  return r;
}

EnergyReport energy_report(const SampleGrid& grid, double p,
                           std::optional<double> lambda) {
  check_p(p);
  PairTriples pt(grid);
  return energy_report(grid, pt, p, lambda);
}

}  // namespace menger
