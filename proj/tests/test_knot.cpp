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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "menger/energy.hpp"
#include "menger/errors.hpp"
#include "menger/fixtures.hpp"
#include "menger/knot.hpp"

namespace menger {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Knot, EvaluateCircle) {
  const FourierKnot c = FourierKnot::circle();
  EXPECT_EQ(evaluate(c, 0.0), (Vec3{1, 0, 0}));
  for (double x : {0.0, 0.3, 1.7, 4.0}) EXPECT_NEAR(norm(evaluate(c, x, 1)), 1.0, 1e-15);
}

TEST(Knot, EvaluateIsPeriodic) {
  const FourierKnot k = fixtures::random_knot(6, 11);
  for (int order = 0; order < 3; ++order)
    for (double x : {0.1, 2.5, 5.9}) {
      const Vec3 a = evaluate(k, x, order), b = evaluate(k, x + 2 * kPi, order);
      EXPECT_NEAR(norm(a - b), 0.0, 1e-12 * (1 + norm(a)));
    }
  EXPECT_THROW(evaluate(k, 0.0, 3), InvalidArgument);
}

TEST(Knot, DerivativesMatchFiniteDifferences) {
  const FourierKnot k = fixtures::trefoil();
  const double x = 0.77, e = 1e-5;
  for (int order = 1; order < 3; ++order) {
    const Vec3 fd = (1.0 / (2 * e)) * (evaluate(k, x + e, order - 1) - evaluate(k, x - e, order - 1));
    EXPECT_NEAR(norm(fd - evaluate(k, x, order)), 0.0, 1e-7 * norm(fd));
  }
}

TEST(Knot, RejectsBadCoefficients) {
  EXPECT_THROW(FourierKnot({}, {}), InvalidArgument);
  EXPECT_THROW(FourierKnot({{1, 0, 0}}, {}), InvalidArgument);
  EXPECT_THROW(FourierKnot({{NAN, 0, 0}}, {{0, 1, 0}}), InvalidArgument);
}

TEST(Knot, GridOfUnitCircle) {
  const SampleGrid g = build_grid(FourierKnot::circle(), 8);
  EXPECT_EQ(g.m_samples(), 8);
  EXPECT_DOUBLE_EQ(g.h(), 2 * kPi / 8);
  for (int i = 0; i < 8; ++i) {
    EXPECT_NEAR(norm(g.points()[i]), 1.0, 1e-15);
    EXPECT_NEAR(std::atan2(g.points()[i].y, g.points()[i].x),
                std::remainder(i * g.h(), 2 * kPi), 1e-14);
    EXPECT_NEAR(g.speed()[i], 1.0, 1e-15);
  }
}

TEST(Knot, GridOfScaledCircle) {
  const SampleGrid g = build_grid(FourierKnot::circle(2.0, 3), 16);
  for (double s : g.speed()) EXPECT_NEAR(s, 2.0, 1e-14);
  EXPECT_NEAR(g.min_speed(), 2.0, 1e-14);
}

TEST(Knot, GridReconstructsFromBasisTables) {
  const FourierKnot k = fixtures::random_knot(7, 3);
  const SampleGrid g = build_grid(k, 40);
  for (int c = 0; c < 3; ++c) {
    const Eigen::VectorXd v = g.q() * k.component(c);
    const Eigen::VectorXd v1 = g.dq() * k.component(c);
    const Eigen::VectorXd v2 = g.ddq() * k.component(c);
    for (int i = 0; i < 40; ++i) {
      auto pick = [c](const Vec3& w) { return c == 0 ? w.x : (c == 1 ? w.y : w.z); };
      EXPECT_NEAR(v[i], pick(g.points()[i]), 1e-12);
      EXPECT_NEAR(v1[i], pick(g.d1()[i]), 1e-12);
      EXPECT_NEAR(v2[i], pick(g.d2()[i]), 1e-12);
    }
  }
}

TEST(Knot, BasisTablesFollowDerivativeRelations) {
  const int N = 5, M = 23;
  const SampleGrid g = build_grid(fixtures::random_knot(N, 5), M);
  for (int i = 0; i < M; ++i)
    for (int k = 1; k <= N; ++k) {
      const double x = g.x(i);
      EXPECT_NEAR(g.q()(i, 2 * k - 2), std::cos(k * x), 1e-15);
      EXPECT_NEAR(g.q()(i, 2 * k - 1), std::sin(k * x), 1e-15);
      EXPECT_NEAR(g.dq()(i, 2 * k - 2), -k * std::sin(k * x), 1e-14);
      EXPECT_NEAR(g.dq()(i, 2 * k - 1), k * std::cos(k * x), 1e-14);
      EXPECT_NEAR(g.ddq()(i, 2 * k - 2), -k * k * std::cos(k * x), 1e-13);
      EXPECT_NEAR(g.ddq()(i, 2 * k - 1), -k * k * std::sin(k * x), 1e-13);
    }
}

TEST(Knot, EvaluateAtNodesEqualsGridBitwise) {
  const FourierKnot k = fixtures::random_knot(9, 8);
  const SampleGrid g = build_grid(k, 31);
  for (int i = 0; i < 31; ++i) {
    EXPECT_EQ(evaluate(k, g.x(i), 0), g.points()[i]);
    EXPECT_EQ(evaluate(k, g.x(i), 1), g.d1()[i]);
    EXPECT_EQ(evaluate(k, g.x(i), 2), g.d2()[i]);
  }
}

TEST(Knot, GridRejectsZeroSpeed) {
  // (cos x, 0, 0) stops at x = 0.
  const FourierKnot k({{1, 0, 0}}, {{0, 0, 0}});
  EXPECT_THROW(build_grid(k, 16), DegenerateError);
  EXPECT_THROW(build_grid(FourierKnot::circle(), 2), InvalidArgument);
}

TEST(Knot, FitRoundTrip) {
  for (int N : {1, 4, 20}) {
    const FourierKnot k = fixtures::random_knot(N, 100 + N);
    const SampleGrid g = build_grid(k, 4 * N + 1);
    EXPECT_LE(fit_fourier(g.points(), N).max_coeff_diff(k), 1e-10) << "N=" << N;
  }
  const FourierKnot k = fixtures::random_knot(6, 1);
  const SampleGrid g = build_grid(k, 13);  // M = 2N + 1
  EXPECT_LE(fit_fourier(g.points(), 6).max_coeff_diff(k), 1e-10);
}

TEST(Knot, FitDropsConstantContent) {
  std::vector<Vec3> pts(21, Vec3{2.5, 2.5, 2.5});
  const FourierKnot k = fit_fourier(pts, 4);
  EXPECT_LE(k.max_coeff_diff(FourierKnot({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
                                         {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}})),
            1e-15);

  const SampleGrid g = build_grid(FourierKnot::circle(1.0, 3), 32);
  std::vector<Vec3> moved = g.points();
  for (auto& p : moved) p += Vec3{5, 0, 0};
  EXPECT_LE(fit_fourier(moved, 3).max_coeff_diff(FourierKnot::circle(1.0, 3)), 1e-14);
}

TEST(Knot, FitNeedsEnoughSamples) {
  std::vector<Vec3> pts(8, Vec3{});
  EXPECT_THROW(fit_fourier(pts, 4), InvalidArgument);
  EXPECT_NO_THROW(fit_fourier(std::vector<Vec3>(9, Vec3{}), 4));
}

TEST(Knot, Scale) {
  const FourierKnot k = fixtures::random_knot(5, 9);
  EXPECT_LE(scale(FourierKnot::circle(), 2.0).max_coeff_diff(FourierKnot::circle(2.0)), 0.0);
  EXPECT_LE(scale(scale(k, 2.0), 0.5).max_coeff_diff(k), 0.0);
  const double L = length(build_grid(k, 64));
  EXPECT_NEAR(length(build_grid(scale(k, 3.0), 64)), 3.0 * L, 1e-12 * L);
  EXPECT_THROW(scale(k, 0.0), InvalidArgument);
}

TEST(Knot, DefaultSamples) {
  EXPECT_EQ(default_samples(1), 64);
  EXPECT_EQ(default_samples(8), 64);
  EXPECT_EQ(default_samples(20), 160);
}

TEST(Knot, ResamplePolygonIsEvenByArclength) {
  const std::vector<Vec3> sq{{0, 0, 0}, {3, 0, 0}, {3, 1, 0}, {0, 1, 0}};
  const auto pts = resample_polygon(sq, 16);  // perimeter 8, spacing 0.5
  EXPECT_EQ(pts[0], (Vec3{0, 0, 0}));
  EXPECT_NEAR(norm(pts[6] - Vec3{3, 0, 0}), 0.0, 1e-15);
  EXPECT_NEAR(norm(pts[7] - Vec3{3, 0.5, 0}), 0.0, 1e-15);
  const std::vector<Vec3> bad{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}};
  EXPECT_THROW(resample_polygon(bad, 5), DegenerateError);
}

TEST(Knot, FitPolygonOfFineCircle) {
  std::vector<Vec3> poly(256);
  for (int i = 0; i < 256; ++i) poly[i] = {std::cos(2 * kPi * i / 256), std::sin(2 * kPi * i / 256), 0};
  EXPECT_LE(fit_polygon(poly, 20).max_coeff_diff(FourierKnot::circle(1.0, 20)), 1e-4);
  EXPECT_THROW(fit_polygon(std::span(poly).first(41), 20), InvalidArgument);
}

TEST(Knot, PolygonGridOfSquare) {
  const std::vector<Vec3> sq{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  const SampleGrid g = build_polygon_grid(sq, 32);
  EXPECT_EQ(g.n_basis(), 0);
  EXPECT_EQ(g.points()[8], (Vec3{1, 0, 0}));
  for (int i = 0; i < 32; ++i) {
    EXPECT_NEAR(g.speed()[i], 4.0 / (2 * kPi), 1e-15);
    EXPECT_EQ(g.d2()[i], (Vec3{0, 0, 0}));
  }
  // Forward tangent at a corner.
  EXPECT_GT(g.d1()[8].y, 0.0);
  EXPECT_NEAR(length(g), 4.0, 1e-14);
}

}  // namespace
}  // namespace menger
