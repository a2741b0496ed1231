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

// Slow reference implementations used only by the tests. Each one is a
// direct transcription of a formula, with no packing, flipping, rescaling or
// trigonometric shortcuts.

#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "menger/assembly.hpp"
#include "menger/energy.hpp"
#include "menger/geometry.hpp"
#include "menger/knot.hpp"
#include "menger/variation.hpp"

namespace menger::oracle {

/// 1/R from the three side lengths (Heron).
inline double inv_circumradius_sides(const Vec3& X, const Vec3& Y, const Vec3& Z) {
  const double a = norm(Y - Z), b = norm(X - Z), c = norm(X - Y);
  const double s = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
  return std::sqrt(std::max(s, 0.0)) / (a * b * c);
}

/// Integrand value c(i,j,k) for any index triple, diagonals included.
inline double c_any(const SampleGrid& g, int i, int j, int k) {
  const auto& P = g.points();
  if (i == j && j == k) return local_curvature(g.d1()[i], g.d2()[i]);
  // Two equal: tangent at the repeated index t, s the other one.
  if (i == j || j == k || i == k) {
    const int t = (i == j || i == k) ? i : j;
    const int s = (i == j) ? k : (i == k ? j : i);
    const Vec3 d = P[t] - P[s];
    return 2.0 * norm(wedge(d, g.d1()[t])) / (norm2(d) * g.speed()[t]);
  }
  return inv_circumradius(P[i], P[j], P[k]);
}

/// h^3 Σ over all M^3 ordered index triples.
inline double mp_bruteforce(const SampleGrid& g, double p) {
  const int M = g.m_samples();
  const auto& s = g.speed();
  double sum = 0;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j)
      for (int k = 0; k < M; ++k)
        sum += std::pow(c_any(g, i, j, k), p) * s[i] * s[j] * s[k];
  const double h = g.h();
  return h * h * h * sum;
}

// Two-point integrand of δM_p, tangent at t (one of the three orderings).
inline double stt_term(const SampleGrid& g, const DirectionSamples& f, int s, int t,
                       double p) {
  const auto& P = g.points();
  const auto& D1 = g.d1();
  const Vec3 D = P[t] - P[s];
  const Vec3 DF = f.p[t] - f.p[s];
  const Vec3 W = wedge(D, D1[t]);
  const double d = norm(D), ss = norm(D1[s]), st = norm(D1[t]), nW = norm(W);
  const double pref = std::pow(2.0, p) * ss / (std::pow(d, 2 * p) * std::pow(st, p - 2));
  return pref * (std::pow(nW, p) * (dot(D1[s], f.d1[s]) / (ss * ss) +
                                    (2 - p) * dot(D1[t], f.d1[t]) / (st * st) -
                                    2 * p * dot(D, DF) / (d * d)) +
                 p * std::pow(nW, p - 2) *
                     (st * st * dot(D, DF) + d * d * dot(D1[t], f.d1[t]) -
                      dot(D, D1[t]) * (dot(D1[t], DF) + dot(D, f.d1[t]))));
}

// Curvature-diagonal integrand of δM_p.
inline double sss_term(const SampleGrid& g, const DirectionSamples& f, int i, double p) {
  const Vec3& a = g.d1()[i];
  const Vec3& b = g.d2()[i];
  const double s = norm(a), X = norm(wedge(a, b));
  return std::pow(s, 3 - 3 * p) *
         ((3 - 3 * p) * std::pow(X, p) * dot(a, f.d1[i]) / (s * s) +
          p * std::pow(X, p - 2) *
              (s * s * dot(b, f.d2[i]) + norm2(b) * dot(a, f.d1[i]) -
               dot(a, b) * (dot(a, f.d2[i]) + dot(b, f.d1[i]))));
}

/// δM_p with the fully symmetric distinct-triple integrand (wedge form).
inline double delta_mp_long(const SampleGrid& g, const DirectionSamples& f, double p) {
  const int M = g.m_samples();
  const auto& P = g.points();
  const auto& s = g.speed();
  double sum = 0;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j)
      for (int k = 0; k < M; ++k) {
        if (i == j || j == k || i == k) continue;
        const Vec3 u = P[j] - P[i], v = P[k] - P[i];
        const Vec3 X0 = wedge(u, v);
        const double nX = norm(X0);
        const double dij = norm(P[i] - P[j]), djk = norm(P[j] - P[k]), dik = norm(P[i] - P[k]);
        const double pref = std::pow(2.0, p) * s[i] * s[j] * s[k] /
                            (std::pow(dij, p) * std::pow(djk, p) * std::pow(dik, p));
        auto g_ = [&](int a) { return dot(g.d1()[a], f.d1[a]) / (s[a] * s[a]); };
        auto r_ = [&](int a, int b) {
          return dot(P[a] - P[b], f.p[a] - f.p[b]) / norm2(P[a] - P[b]);
        };
        const double first = std::pow(nX, p) * ((g_(i) + g_(j) + g_(k)) -
                                                p * (r_(i, j) + r_(j, k) + r_(i, k)));
        const double second =
            p * std::pow(nX, p - 2) *
            dot(X0, wedge(f.p[j] - f.p[i], v) + wedge(u, f.p[k] - f.p[i]));
        sum += pref * (first + second);
      }
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b)
      if (a != b) sum += 3.0 * stt_term(g, f, a, b, p);
  for (int i = 0; i < M; ++i) sum += sss_term(g, f, i, p);
  const double h = g.h();
  return h * h * h * sum;
}

/// δM_p with the non-symmetric simplified distinct-triple integrand.
inline double delta_mp_simplified(const SampleGrid& g, const DirectionSamples& f,
                                  double p) {
  const int M = g.m_samples();
  const auto& P = g.points();
  const auto& s = g.speed();
  double sum = 0;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j)
      for (int k = 0; k < M; ++k) {
        if (i == j || j == k || i == k) continue;
        const Vec3 u = P[j] - P[i], v = P[k] - P[i];
        const Vec3 U = f.p[j] - f.p[i], V = f.p[k] - f.p[i];
        const double nX = norm(wedge(u, v));
        const double dij = norm(u), djk = norm(P[j] - P[k]), dik = norm(v);
        const double pref = std::pow(2.0, p) * s[i] * s[j] * s[k] /
                            (std::pow(dij, p) * std::pow(djk, p) * std::pow(dik, p));
        sum += pref *
               (std::pow(nX, p) * (3 * dot(g.d1()[i], f.d1[i]) / (s[i] * s[i]) -
                                   3 * p * dot(u, U) / (dij * dij)) +
                p * std::pow(nX, p - 2) *
                    (norm2(v) * dot(u, U) + norm2(u) * dot(v, V) -
                     dot(u, v) * (dot(v, U) + dot(u, V))));
      }
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b)
      if (a != b) sum += 3.0 * stt_term(g, f, a, b, p);
  for (int i = 0; i < M; ++i) sum += sss_term(g, f, i, p);
  const double h = g.h();
  return h * h * h * sum;
}

/// σ tables evaluated from their closed forms, index by index.
inline SigmaTables sigma_naive(const SampleGrid& g, double p, double tau) {
  const int M = g.m_samples();
  const auto& P = g.points();
  const auto& D1 = g.d1();
  const auto& D2 = g.d2();
  const auto& s = g.speed();
  auto dp = [&](int i, int j) { return P[i] - P[j]; };
  auto d = [&](int i, int j) { return norm(P[i] - P[j]); };
  auto base3 = [&](int i, int j, int k) {
    return 2 * norm(wedge(P[j] - P[i], P[k] - P[i])) / (d(i, j) * d(j, k) * d(i, k));
  };
  // 2|X1_ij| / (|dp_ij|^2 |p'_i|) with X1_ij = (p_i - p_j) ∧ p'_i.
  auto base2 = [&](int i, int j) {
    return 2 * norm(wedge(P[i] - P[j], D1[i])) / (d(i, j) * d(i, j) * s[i]);
  };
  SigmaTables t;
  t.s1 = t.s2 = t.s3 = t.s4 = Eigen::VectorXd::Zero(M);
  t.s5 = t.s6 = t.s7 = Eigen::MatrixXd::Zero(M, M);
  const double f = std::pow(g.h(), 3) * tau;
  for (int i = 0; i < M; ++i) {
    const double kap = norm(wedge(D1[i], D2[i])) / std::pow(s[i], 3);
    double s1 = 0, s2 = 0;
    for (int k = 0; k < M; ++k) {
      if (k == i) continue;
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        s1 += 24 * p * std::pow(base3(i, j, k), p - 2) * s[i] * s[j] * s[k] /
              (std::pow(d(i, j), 2) * std::pow(d(i, k), 2));
        s2 += 6 * std::pow(base3(i, j, k), p) * s[j] * s[k] / s[i];
      }
    }
    s2 += (3 - 3 * p) * std::pow(kap, p) * s[i] +
          p * std::pow(kap, p - 2) * norm2(D2[i]) / std::pow(s[i], 3);
    for (int j = 0; j < M; ++j) {
      if (j == i) continue;
      s2 += 3 * std::pow(base2(j, i), p) * s[j] * s[j] / s[i] -
            3 * (p - 2) * std::pow(base2(i, j), p) * s[j] +
            12 * p * std::pow(base2(i, j), p - 2) * s[j] / std::pow(d(i, j), 2);
    }
    t.s1[i] = f * s1;
    t.s2[i] = f * s2;
    t.s3[i] = f * p * std::pow(kap, p - 2) / s[i];
    t.s4[i] = f * (-p) * std::pow(kap, p - 2) * dot(D1[i], D2[i]) / std::pow(s[i], 3);
  }
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      if (i == j) continue;
      const double dij = d(i, j);
      t.s6(i, j) = f * (-12 * p) * std::pow(base2(i, j), p - 2) * s[j] / std::pow(dij, 4) *
                   dot(dp(i, j), D1[i]);
      if (j < i) continue;
      double s5 = 0, s7 = 0;
      for (int k = 0; k < M; ++k) {
        if (k == i || k == j) continue;
        const double b = base3(i, j, k);
        const double P3 = s[i] * s[j] * s[k];
        s5 += -24 * p * std::pow(b, p - 2) * P3 /
              (std::pow(dij, 2) * std::pow(d(j, k), 2) * std::pow(d(i, k), 2)) *
              dot(dp(j, k), dp(i, k));
        s7 += -6 * p * std::pow(b, p) * P3 / (dij * dij);
      }
      s7 += -6 * p *
                (std::pow(base2(j, i), p) * s[j] * s[j] * s[i] / (dij * dij) +
                 std::pow(base2(i, j), p) * s[i] * s[i] * s[j] / (dij * dij)) +
            12 * p *
                (std::pow(base2(j, i), p - 2) * s[j] * s[j] * s[i] / std::pow(dij, 4) +
                 std::pow(base2(i, j), p - 2) * s[i] * s[i] * s[j] / std::pow(dij, 4));
      t.s5(i, j) = t.s5(j, i) = f * s5;
      t.s7(i, j) = t.s7(j, i) = f * s7;
    }
  return t;
}

/**
 * B for M_p by five nested loops (rows a, columns b, indices i, j, k): the
 * linearized first-variation integrand with the test function φ_a in place
 * of Φ and the unknown φ_b in every linear slot of γ.
 */
inline Eigen::MatrixXd b_five_loop(const SampleGrid& g, double p) {
  const int M = g.m_samples();
  const int n = g.n_basis();
  const auto& P = g.points();
  const auto& D1 = g.d1();
  const auto& D2 = g.d2();
  const auto& s = g.speed();
  const auto& q = g.q();
  const auto& q1 = g.dq();
  const auto& q2 = g.ddq();
  const double h3 = std::pow(g.h(), 3);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double sum = 0;
      for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j)
          for (int k = 0; k < M; ++k) {
            if (i == j || j == k || i == k) continue;
            const double dij = norm(P[i] - P[j]), djk = norm(P[j] - P[k]),
                         dik = norm(P[i] - P[k]);
            const double nX = norm(wedge(P[j] - P[i], P[k] - P[i]));
            const double pref = std::pow(2.0, p) * s[i] * s[j] * s[k] /
                                (std::pow(dij, p) * std::pow(djk, p) * std::pow(dik, p));
            const double uu = (q(i, b) - q(j, b)) * (q(i, a) - q(j, a));
            sum += pref *
                   (std::pow(nX, p) * (3 * q1(i, b) * q1(i, a) / (s[i] * s[i]) -
                                       3 * p * uu / (dij * dij)) +
                    3 * p * std::pow(nX, p - 2) *
                        (djk * djk * q(i, b) * q(i, a) -
                         dot(P[i] - P[k], P[j] - P[k]) *
                             (q(i, b) * q(j, a) + q(j, b) * q(i, a))));
          }
      for (int ss = 0; ss < M; ++ss)
        for (int t = 0; t < M; ++t) {
          if (ss == t) continue;
          const Vec3 D = P[t] - P[ss];
          const double d = norm(D), st = s[t], sv = s[ss];
          const double nW = norm(wedge(D, D1[t]));
          const double pref =
              std::pow(2.0, p) * sv / (std::pow(d, 2 * p) * std::pow(st, p - 2));
          const double du = q(t, b) - q(ss, b), dF = q(t, a) - q(ss, a);
          sum += 3 * pref *
                 (std::pow(nW, p) * (q1(ss, b) * q1(ss, a) / (sv * sv) +
                                     (2 - p) * q1(t, b) * q1(t, a) / (st * st) -
                                     2 * p * du * dF / (d * d)) +
                  p * std::pow(nW, p - 2) *
                      (st * st * du * dF + d * d * q1(t, b) * q1(t, a) -
                       dot(D, D1[t]) * (q1(t, b) * dF + du * q1(t, a))));
        }
      for (int i = 0; i < M; ++i) {
        const double si = s[i];
        const double X = norm(wedge(D1[i], D2[i]));
        sum += std::pow(si, 3 - 3 * p) *
               ((3 - 3 * p) * std::pow(X, p) * q1(i, b) * q1(i, a) / (si * si) +
                p * std::pow(X, p - 2) *
                    (si * si * q2(i, b) * q2(i, a) + norm2(D2[i]) * q1(i, b) * q1(i, a) -
                     dot(D1[i], D2[i]) * (q1(i, b) * q2(i, a) + q2(i, b) * q1(i, a))));
      }
      B(a, b) = h3 * sum;
    }
  return B;
}

}  // namespace menger::oracle
