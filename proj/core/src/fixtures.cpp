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

#include "menger/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "menger/errors.hpp"

namespace menger::fixtures {

namespace {

constexpr double kPi = std::numbers::pi;

FourierKnot from_modes(int n_modes, std::vector<Vec3> a, std::vector<Vec3> b) {
  if (n_modes < static_cast<int>(a.size()))
    throw InvalidArgument("fixture needs at least " + std::to_string(a.size()) + " modes");
  a.resize(n_modes);
  b.resize(n_modes);
  return FourierKnot(std::move(a), std::move(b));
}

}  // namespace

FourierKnot circle(double r, int n_modes) { return FourierKnot::circle(r, n_modes); }

FourierKnot stadium(int n_modes) {
  const double L = kPi + 2.0;
  const int n = 8192;
  std::vector<Vec3> pts(n);
  for (int i = 0; i < n; ++i) {
    // Start at the middle of the lower segment, walk counterclockwise.
    double s = L * i / n;
    Vec3 v;
    if (s < 0.5) {
      v = {s, -0.5, 0};
    } else if ((s -= 0.5) < 0.5 * kPi) {
      const double a = -0.5 * kPi + 2.0 * s;
      v = {0.5 + 0.5 * std::cos(a), 0.5 * std::sin(a), 0};
    } else if ((s -= 0.5 * kPi) < 1.0) {
      v = {0.5 - s, 0.5, 0};
    } else if ((s -= 1.0) < 0.5 * kPi) {
      const double a = 0.5 * kPi + 2.0 * s;
      v = {-0.5 + 0.5 * std::cos(a), 0.5 * std::sin(a), 0};
    } else {
      s -= 0.5 * kPi;
      v = {-0.5 + s, -0.5, 0};
    }
    pts[i] = v;
  }
  return fit_fourier(pts, n_modes);
}

FourierKnot trefoil(int n_modes) {
  return from_modes(n_modes, {{0, 1, 0}, {0, -2, 0}, {0, 0, 0}},
                    {{1, 0, 0}, {2, 0, 0}, {0, 0, -1}});
}

FourierKnot figure_eight(int n_modes) {
  return from_modes(n_modes,
                    {{0.5, 0, 0}, {0, 0, 0}, {2, 0, 0}, {0, 0, 0}, {0.5, 0, 0}},
                    {{0, 0.5, 0}, {0, 0, 0}, {0, 2, 0}, {0, 0, 1}, {0, 0.5, 0}});
}

FourierKnot random_knot(int n_modes, std::uint64_t seed, double amplitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vec3> a(n_modes), b(n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const double s = amplitude / ((k + 1.0) * (k + 1.0));
    a[k] = {s * u(rng), s * u(rng), s * u(rng)};
    b[k] = {s * u(rng), s * u(rng), s * u(rng)};
  }
  a[0] += Vec3{1, 0, 0};
  b[0] += Vec3{0, 1, 0};
  return FourierKnot(std::move(a), std::move(b));
}

FourierKnot random_direction(int n_modes, std::uint64_t seed, double amplitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  std::vector<Vec3> a(n_modes), b(n_modes);
  for (int k = 0; k < n_modes; ++k) {
    a[k] = {u(rng), u(rng), u(rng)};
    b[k] = {u(rng), u(rng), u(rng)};
  }
  return FourierKnot(std::move(a), std::move(b));
}

}  // namespace menger::fixtures
