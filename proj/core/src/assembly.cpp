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

#include "menger/assembly.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "menger/errors.hpp"
#include "menger/parallel.hpp"

namespace menger {

EnergyKind parse_energy_kind(std::string_view s) {
  if (s == "mp") return EnergyKind::mp;
  if (s == "ep") return EnergyKind::ep;
  if (s == "ep-lambda" || s == "ep_lambda") return EnergyKind::ep_lambda;
  throw InvalidArgument("unknown energy kind '" + std::string(s) +
                        "' (expected mp, ep or ep-lambda)");
}

std::string_view to_string(EnergyKind k) {
  switch (k) {
    case EnergyKind::mp:
      return "mp";
    case EnergyKind::ep:
      return "ep";
    case EnergyKind::ep_lambda:
      return "ep-lambda";
  }
  return "?";
}

void mirror_upper(Eigen::MatrixXd& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = j + 1; i < m.rows(); ++i) m(i, j) = m(j, i);
}

namespace {

struct SigmaPartial {
  Eigen::VectorXd s1, s2;
  Eigen::MatrixXd s5, s7;  // upper triangle only
};

void check_finite(const SigmaTables& t) {
  const Eigen::Index M = t.s1.size();
  auto fail = [](const std::string& what) {
    throw DegenerateError("build_sigma: non-finite entry " + what);
  };
  for (Eigen::Index i = 0; i < M; ++i) {
    if (!std::isfinite(t.s1[i])) fail("s1[" + std::to_string(i) + "]");
    if (!std::isfinite(t.s2[i])) fail("s2[" + std::to_string(i) + "]");
    if (!std::isfinite(t.s3[i])) fail("s3[" + std::to_string(i) + "]");
    if (!std::isfinite(t.s4[i])) fail("s4[" + std::to_string(i) + "]");
  }
  for (Eigen::Index j = 0; j < M; ++j)
    for (Eigen::Index i = 0; i < M; ++i) {
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (!std::isfinite(t.s5(i, j))) fail("s5" + at);
      if (!std::isfinite(t.s6(i, j))) fail("s6" + at);
      if (!std::isfinite(t.s7(i, j))) fail("s7" + at);
    }
}

}  // namespace

SigmaTables build_sigma(const SampleGrid& grid, const PairTriples& pt, double p,
                        double tau) {
  if (!(p >= 2.0)) throw InvalidArgument("build_sigma: p must be >= 2");
  const int M = grid.m_samples();
  const auto& P = grid.points();
  const auto& D1 = grid.d1();
  const auto& D2 = grid.d2();
  const auto& sp = grid.speed();

  SigmaTables t;
  t.s1 = Eigen::VectorXd::Zero(M);
  t.s2 = Eigen::VectorXd::Zero(M);
  t.s3 = Eigen::VectorXd::Zero(M);
  t.s4 = Eigen::VectorXd::Zero(M);
  t.s5 = Eigen::MatrixXd::Zero(M, M);
  t.s6 = Eigen::MatrixXd::Zero(M, M);
  t.s7 = Eigen::MatrixXd::Zero(M, M);
  const double bmax = pt.base_max();
  if (bmax == 0.0 || tau == 0.0) return t;
  t.log_factor = p * std::log(bmax);
  const double inv = 1.0 / bmax;
  const double inv2 = inv * inv;

  // Strict triples i < j < k, each standing for its six orderings.
  const auto bounds = triple_block_bounds(M, kTripleBlocks);
  std::vector<SigmaPartial> parts(kTripleBlocks);
  parallel_blocks(kTripleBlocks, [&](int b) {
    SigmaPartial& q = parts[b];
    q.s1 = Eigen::VectorXd::Zero(M);
    q.s2 = Eigen::VectorXd::Zero(M);
    q.s5 = Eigen::MatrixXd::Zero(M, M);
    q.s7 = Eigen::MatrixXd::Zero(M, M);
    for (int k = bounds[b]; k < bounds[b + 1]; ++k)
      for (int j = 1; j < k; ++j) {
        const double djk = pt.dist(j, k);
        const double djk2 = djk * djk;
        const Vec3& dp_jk = pt.dp(j, k);
        for (int i = 0; i < j; ++i) {
          const double rho = pt.base3(i, j, k) * inv;
          const double rp2 = pow_nonneg(rho, p - 2.0) * inv2;
          const double rp = pow_nonneg(rho, p);
          const double P3 = sp[i] * sp[j] * sp[k];
          const double dij = pt.dist(i, j), dik = pt.dist(i, k);
          const double dij2 = dij * dij, dik2 = dik * dik;
          const Vec3& dp_ij = pt.dp(i, j);
          const Vec3& dp_ik = pt.dp(i, k);

          const double a1 = 24.0 * p * rp2 * P3;
          q.s1[i] += a1 / (dij2 * dik2);
          q.s1[j] += a1 / (dij2 * djk2);
          q.s1[k] += a1 / (dik2 * djk2);

          const double b2 = 6.0 * rp * P3;
          q.s2[i] += b2 / (sp[i] * sp[i]);
          q.s2[j] += b2 / (sp[j] * sp[j]);
          q.s2[k] += b2 / (sp[k] * sp[k]);

          // Pair (a,b) with third vertex c: (p_a - p_c)·(p_b - p_c).
          const double c5 = -24.0 * p * rp2 * P3 / (dij2 * djk2 * dik2);
          q.s5(i, j) += c5 * dot(dp_ik, dp_jk);
          q.s5(j, k) += c5 * dot(dp_ij, dp_ik);
          q.s5(i, k) -= c5 * dot(dp_ij, dp_jk);

          const double d7 = -6.0 * p * rp * P3;
          q.s7(i, j) += d7 / dij2;
          q.s7(j, k) += d7 / djk2;
          q.s7(i, k) += d7 / dik2;
        }
      }
  });
  for (const auto& q : parts) {
    t.s1 += q.s1;
    t.s2 += q.s2;
    t.s5 += q.s5;
    t.s7 += q.s7;
  }

  // Two-point diagonals c(s,t,t), tangent at t, weight 3.
  for (int tt = 0; tt < M; ++tt)
    for (int s = 0; s < M; ++s) {
      if (s == tt) continue;
      const double d = pt.dist_any(s, tt);
      const double d2 = d * d;
      const double rho = pt.base2(tt, s) * inv;
      const double rp2 = pow_nonneg(rho, p - 2.0) * inv2;
      const double rp = pow_nonneg(rho, p);
      const double ss = sp[s], st = sp[tt];
      t.s2[s] += 3.0 * rp * st * st / ss;
      t.s2[tt] += 3.0 * (2.0 - p) * rp * ss + 12.0 * p * rp2 * ss / d2;
      const double e7 = -6.0 * p * rp * ss * st * st / d2 +
                        12.0 * p * rp2 * ss * st * st / (d2 * d2);
      if (s < tt)
        t.s7(s, tt) += e7;
      else
        t.s7(tt, s) += e7;
      t.s6(tt, s) += -12.0 * p * rp2 * ss / (d2 * d2) * dot(P[tt] - P[s], D1[tt]);
    }

  // Curvature diagonal.
  for (int i = 0; i < M; ++i) {
    const double rho = pt.base1(i) * inv;
    const double rp2 = pow_nonneg(rho, p - 2.0) * inv2;
    const double rp = pow_nonneg(rho, p);
    const double s = sp[i], s3 = s * s * s;
    t.s2[i] += (3.0 - 3.0 * p) * rp * s + p * rp2 * norm2(D2[i]) / s3;
    t.s3[i] += p * rp2 / s;
    t.s4[i] += -p * rp2 * dot(D1[i], D2[i]) / s3;
  }

  const double h = grid.h();
  const double f = h * h * h * tau;
  t.s1 *= f;
  t.s2 *= f;
  t.s3 *= f;
  t.s4 *= f;
  t.s5 *= f;
  t.s6 *= f;
  t.s7 *= f;
  mirror_upper(t.s5);
  mirror_upper(t.s7);
  check_finite(t);
  return t;
}

Theta build_theta(const Eigen::VectorXd& sigma, int n_modes) {
  const Eigen::Index M = sigma.size();
  const double h = 2.0 * std::numbers::pi / static_cast<double>(M);
  Theta th;
  th.c = Eigen::VectorXd::Zero(2 * n_modes + 1);
  th.s = Eigen::VectorXd::Zero(2 * n_modes + 1);
  for (Eigen::Index i = 0; i < M; ++i) th.c[0] += sigma[i];
  for (int m = 1; m <= 2 * n_modes; ++m)
    for (Eigen::Index i = 0; i < M; ++i) {
      const double x = static_cast<double>(m) * (static_cast<double>(i) * h);
      th.c[m] += sigma[i] * std::cos(x);
      th.s[m] += sigma[i] * std::sin(x);
    }
  return th;
}

namespace {

// Basis function a differentiated d times is factor·cos(kx) or factor·sin(kx).
struct TrigTerm {
  double factor;
  int k;
  bool is_sin;
};

TrigTerm trig_term(int a, int d) {
  const int k = a / 2 + 1;
  const bool base_sin = a % 2 == 1;
  const double kk = k;
  switch (d) {
    case 0:
      return {1.0, k, base_sin};
    case 1:
      return {base_sin ? kk : -kk, k, !base_sin};
    default:
      return {-kk * kk, k, base_sin};
  }
}

}  // namespace

Eigen::MatrixXd theta_contract(const Theta& theta, int n_modes, int da, int db) {
  const int n = 2 * n_modes;
  auto C = [&](int m) { return theta.c[m < 0 ? -m : m]; };
  auto S = [&](int m) { return m < 0 ? -theta.s[-m] : theta.s[m]; };
  Eigen::MatrixXd out(n, n);
  for (int a = 0; a < n; ++a) {
    const TrigTerm ta = trig_term(a, da);
    for (int b = 0; b < n; ++b) {
      const TrigTerm tb = trig_term(b, db);
      const int dm = ta.k - tb.k, sm = ta.k + tb.k;
      double v;
      if (!ta.is_sin && !tb.is_sin)
        v = C(dm) + C(sm);
      else if (ta.is_sin && tb.is_sin)
        v = C(dm) - C(sm);
      else if (ta.is_sin)
        v = S(sm) + S(dm);
      else
        v = S(sm) - S(dm);
      out(a, b) = 0.5 * ta.factor * tb.factor * v;
    }
  }
  return out;
}

Eigen::MatrixXd contract_sigma(const SampleGrid& grid, const SigmaTables& sg) {
  const int n = grid.n_basis();
  const int N = n / 2;
  const Eigen::MatrixXd& Q = grid.q();
  const Eigen::MatrixXd& Q1 = grid.dq();

  // Same-index parts, including the diagonal halves of the σ6 and σ7 terms:
  // d_ij^a d_ij^b = q_i q_i + q_j q_j - q_i q_j - q_j q_i.
  const Eigen::VectorXd r7 = sg.s7.rowwise().sum();
  const Eigen::VectorXd r6 = sg.s6.rowwise().sum();
  Eigen::MatrixXd B = theta_contract(build_theta(sg.s1 + r7, N), N, 0, 0);
  B += theta_contract(build_theta(sg.s2, N), N, 1, 1);
  B += theta_contract(build_theta(sg.s3, N), N, 2, 2);
  const Theta t4 = build_theta(sg.s4, N);
  B += theta_contract(t4, N, 1, 2) + theta_contract(t4, N, 2, 1);
  const Theta t6 = build_theta(r6, N);
  B += theta_contract(t6, N, 1, 0) + theta_contract(t6, N, 0, 1);

  // Cross-index parts as dense products.
  B.noalias() += Q.transpose() * (sg.s5 - sg.s7) * Q;
  const Eigen::MatrixXd G = Q1.transpose() * sg.s6 * Q;
  B -= G;
  B -= G.transpose();
  mirror_upper(B);
  return B;
}

SystemMatrices assemble(const SampleGrid& grid, double p, EnergyKind kind,
                        std::optional<double> lambda) {
  if (grid.n_basis() == 0)
    throw InvalidArgument("assemble: grid has no basis tables");
  if (kind == EnergyKind::ep_lambda && !lambda)
    throw InvalidArgument("assemble: energy ep-lambda needs lambda");
  const PairTriples pt(grid);
  SystemMatrices sys;
  sys.report = energy_report(
      grid, pt, p, kind == EnergyKind::ep_lambda ? lambda : std::nullopt);

  const SigmaTables sg = build_sigma(grid, pt, p, 1.0);
  const Eigen::MatrixXd Bm = contract_sigma(grid, sg);

  const double logm = sys.report.log_mp;
  const double L = sys.report.length;
  const double scaled_m = std::exp(logm - sg.log_factor);
  if (!(scaled_m > 0) || !std::isfinite(scaled_m))
    throw DegenerateError("assemble: M_p vanishes or is not finite");
  double wm = 0, wl = 0;
  switch (kind) {
    case EnergyKind::mp:
      wm = std::exp(sg.log_factor);
      break;
    case EnergyKind::ep:
      wm = std::exp(logm / p + (1.0 - 3.0 / p) * std::log(L)) / (p * scaled_m);
      wl = std::exp(logm / p - 3.0 / p * std::log(L)) * (p - 3.0) / p;
      break;
    case EnergyKind::ep_lambda:
      wm = std::exp(logm / p) / (p * scaled_m);
      wl = *lambda;
      break;
  }

  const Eigen::MatrixXd& Q = grid.q();
  const Eigen::MatrixXd& Q1 = grid.dq();
  const int M = grid.m_samples();
  const double h = grid.h();
  Eigen::VectorXd mass(M), stiff(M);
  for (int i = 0; i < M; ++i) {
    mass[i] = h * grid.speed()[i];
    stiff[i] = h / grid.speed()[i];
  }
  sys.A = Q.transpose() * mass.asDiagonal() * Q;
  mirror_upper(sys.A);
  sys.B = wm * Bm;
  if (wl != 0.0) sys.B += wl * (Q1.transpose() * stiff.asDiagonal() * Q1);
  mirror_upper(sys.B);
  if (!sys.B.allFinite()) throw DegenerateError("assemble: non-finite B");

  for (int c = 0; c < 3; ++c) {
    Eigen::VectorXd w(M);
    for (int i = 0; i < M; ++i) {
      const Vec3& pi = grid.points()[i];
      w[i] = mass[i] * (c == 0 ? pi.x : (c == 1 ? pi.y : pi.z));
    }
    sys.rhs[c] = Q.transpose() * w;
  }
  return sys;
}

}  // namespace menger
