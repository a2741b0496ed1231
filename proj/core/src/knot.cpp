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

#include "menger/knot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "menger/errors.hpp"

namespace menger {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Values of cos(kx), sin(kx) differentiated `order` times:
// (cos)' = -k sin, (sin)' = k cos.
void basis_pair(int k, double x, int order, double& c, double& s) {
  const double ck = std::cos(k * x), sk = std::sin(k * x);
  const double kk = static_cast<double>(k);
  switch (order) {
    case 0:
      c = ck;
      s = sk;
      break;
    case 1:
      c = -kk * sk;
      s = kk * ck;
      break;
    default:
      c = -kk * kk * ck;
      s = -kk * kk * sk;
      break;
  }
}

}  // namespace

FourierKnot::FourierKnot(std::vector<Vec3> cos_coeffs,
                         std::vector<Vec3> sin_coeffs)
    : a_(std::move(cos_coeffs)), b_(std::move(sin_coeffs)) {
  if (a_.empty() || a_.size() != b_.size())
    throw InvalidArgument("FourierKnot: need N >= 1 cosine and sine coefficients");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!is_finite(a_[k]) || !is_finite(b_[k]))
      throw InvalidArgument("FourierKnot: non-finite coefficient in mode " +
                            std::to_string(k + 1));
}

FourierKnot FourierKnot::circle(double r, int n_modes) {
  if (n_modes < 1) throw InvalidArgument("circle: n_modes must be >= 1");
  std::vector<Vec3> a(n_modes), b(n_modes);
  a[0] = {r, 0, 0};
  b[0] = {0, r, 0};
  return FourierKnot(std::move(a), std::move(b));
}

FourierKnot FourierKnot::from_components(const Eigen::VectorXd& cx,
                                         const Eigen::VectorXd& cy,
                                         const Eigen::VectorXd& cz) {
  const Eigen::Index n = cx.size();
  if (n == 0 || n % 2 != 0 || cy.size() != n || cz.size() != n)
    throw InvalidArgument("from_components: need three vectors of equal even length");
  std::vector<Vec3> a(n / 2), b(n / 2);
  for (Eigen::Index k = 0; k < n / 2; ++k) {
    a[k] = {cx[2 * k], cy[2 * k], cz[2 * k]};
    b[k] = {cx[2 * k + 1], cy[2 * k + 1], cz[2 * k + 1]};
  }
  return FourierKnot(std::move(a), std::move(b));
}

Eigen::VectorXd FourierKnot::component(int c) const {
  Eigen::VectorXd v(n_basis());
  auto pick = [c](const Vec3& w) { return c == 0 ? w.x : (c == 1 ? w.y : w.z); };
  for (int k = 0; k < n_modes(); ++k) {
    v[2 * k] = pick(a_[k]);
    v[2 * k + 1] = pick(b_[k]);
  }
  return v;
}

double FourierKnot::max_coeff_diff(const FourierKnot& other) const {
  if (other.n_modes() != n_modes())
    throw InvalidArgument("max_coeff_diff: mode counts differ");
  double d = 0;
  for (int l = 0; l < n_basis(); ++l) {
    const Vec3 e = coeff(l) - other.coeff(l);
    d = std::max({d, std::abs(e.x), std::abs(e.y), std::abs(e.z)});
  }
  return d;
}

Vec3 evaluate(const FourierKnot& knot, double x, int order) {
  if (order < 0 || order > 2) throw InvalidArgument("evaluate: order must be 0, 1 or 2");
  Vec3 v;
  for (int k = 1; k <= knot.n_modes(); ++k) {
    double c, s;
    basis_pair(k, x, order, c, s);
    v += c * knot.cos_coeffs()[k - 1];
    v += s * knot.sin_coeffs()[k - 1];
  }
  return v;
}

FourierKnot scale(const FourierKnot& knot, double r) {
  if (!(r > 0)) throw InvalidArgument("scale: r must be positive");
  std::vector<Vec3> a = knot.cos_coeffs(), b = knot.sin_coeffs();
  for (auto& v : a) v *= r;
  for (auto& v : b) v *= r;
  return FourierKnot(std::move(a), std::move(b));
}

int default_samples(int n_modes) { return std::max(8 * n_modes, 64); }

SampleGrid::SampleGrid(std::vector<Vec3> points, std::vector<Vec3> d1,
                       std::vector<Vec3> d2)
    : p_(std::move(points)), d1_(std::move(d1)), d2_(std::move(d2)) {
  if (p_.size() < 3 || d1_.size() != p_.size() || d2_.size() != p_.size())
    throw InvalidArgument("SampleGrid: need >= 3 samples with matching derivatives");
  h_ = kTwoPi / static_cast<double>(p_.size());
  finish();
}

void SampleGrid::finish() {
  speed_.resize(p_.size());
  min_speed_ = INFINITY;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!is_finite(p_[i]) || !is_finite(d1_[i]) || !is_finite(d2_[i]))
      throw DegenerateError("sample " + std::to_string(i) + " is not finite");
    speed_[i] = norm(d1_[i]);
    min_speed_ = std::min(min_speed_, speed_[i]);
  }
  if (min_speed_ == 0.0) {
    const auto it = std::find(speed_.begin(), speed_.end(), 0.0);
    throw DegenerateError("zero speed |p'| at sample " +
                          std::to_string(it - speed_.begin()));
  }
}

SampleGrid build_grid(const FourierKnot& knot, int M) {
  if (M < 3) throw InvalidArgument("build_grid: M must be >= 3");
  const int N = knot.n_modes();
  SampleGrid g;
  g.h_ = kTwoPi / M;
  g.q_.resize(M, 2 * N);
  g.dq_.resize(M, 2 * N);
  g.ddq_.resize(M, 2 * N);
  for (int i = 0; i < M; ++i) {
    const double x = i * g.h_;
    for (int k = 1; k <= N; ++k) {
      for (int order = 0; order < 3; ++order) {
        double c, s;
        basis_pair(k, x, order, c, s);
        Eigen::MatrixXd& t = order == 0 ? g.q_ : (order == 1 ? g.dq_ : g.ddq_);
        t(i, 2 * k - 2) = c;
        t(i, 2 * k - 1) = s;
      }
    }
  }
  g.p_.resize(M);
  g.d1_.resize(M);
  g.d2_.resize(M);
  for (int i = 0; i < M; ++i) {
    g.p_[i] = evaluate(knot, g.x(i), 0);
    g.d1_[i] = evaluate(knot, g.x(i), 1);
    g.d2_[i] = evaluate(knot, g.x(i), 2);
  }
  g.finish();
  return g;
}

FourierKnot fit_fourier(std::span<const Vec3> points, int n_modes) {
  const int M = static_cast<int>(points.size());
  if (n_modes < 1) throw InvalidArgument("fit_fourier: N must be >= 1");
  if (M <= 2 * n_modes)
    throw InvalidArgument("fit_fourier: need M > 2N samples (M = " +
                          std::to_string(M) + ", N = " + std::to_string(n_modes) + ")");
  const double h = kTwoPi / M;
  std::vector<Vec3> a(n_modes), b(n_modes);
  for (int k = 1; k <= n_modes; ++k) {
    Vec3 sa, sb;
    for (int i = 0; i < M; ++i) {
      const double x = i * h;
      sa += std::cos(k * x) * points[i];
      sb += std::sin(k * x) * points[i];
    }
    a[k - 1] = (h / std::numbers::pi) * sa;
    b[k - 1] = (h / std::numbers::pi) * sb;
  }
  return FourierKnot(std::move(a), std::move(b));
}

namespace {

// Cumulative arclength s[0] = 0, ..., s[n] = L of the closed polygon.
std::vector<double> cumulative_length(std::span<const Vec3> v) {
  const std::size_t n = v.size();
  std::vector<double> s(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double e = norm(v[(i + 1) % n] - v[i]);
    if (e == 0.0)
      throw DegenerateError("polygon edge " + std::to_string(i) + " has zero length");
    s[i + 1] = s[i] + e;
  }
  return s;
}

// Edge index e and fraction t in [0,1) for arclength position `pos`.
void locate(const std::vector<double>& s, double pos, std::size_t& e, double& t) {
  const std::size_t n = s.size() - 1;
  e = static_cast<std::size_t>(std::upper_bound(s.begin(), s.end(), pos) - s.begin());
  e = std::clamp<std::size_t>(e, 1, n) - 1;
  t = (pos - s[e]) / (s[e + 1] - s[e]);
}

}  // namespace

std::vector<Vec3> resample_polygon(std::span<const Vec3> vertices, int n) {
  if (vertices.size() < 2) throw InvalidArgument("resample_polygon: need >= 2 vertices");
  const auto s = cumulative_length(vertices);
  const double L = s.back();
  std::vector<Vec3> out(n);
  for (int j = 0; j < n; ++j) {
    std::size_t e;
    double t;
    locate(s, L * j / n, e, t);
    const Vec3& a = vertices[e];
    const Vec3& b = vertices[(e + 1) % vertices.size()];
    out[j] = a + t * (b - a);
  }
  return out;
}

FourierKnot fit_polygon(std::span<const Vec3> vertices, int n_modes) {
  if (n_modes < 1) throw InvalidArgument("fit_polygon: N must be >= 1");
  if (static_cast<int>(vertices.size()) < 2 * n_modes + 2)
    throw InvalidArgument("fit_polygon: need at least 2N+2 = " +
                          std::to_string(2 * n_modes + 2) + " vertices, got " +
                          std::to_string(vertices.size()));
  const auto pts = resample_polygon(vertices, 4 * n_modes + 1);
  return fit_fourier(pts, n_modes);
}

SampleGrid build_polygon_grid(std::span<const Vec3> vertices, int M) {
  if (vertices.size() < 3) throw InvalidArgument("build_polygon_grid: need >= 3 vertices");
  if (M < 3) throw InvalidArgument("build_polygon_grid: M must be >= 3");
  const auto s = cumulative_length(vertices);
  const double L = s.back();
  std::vector<Vec3> p(M), d1(M), d2(M);
  for (int j = 0; j < M; ++j) {
    std::size_t e;
    double t;
    locate(s, L * j / M, e, t);
    const Vec3& a = vertices[e];
    const Vec3& b = vertices[(e + 1) % vertices.size()];
    p[j] = a + t * (b - a);
    // Constant speed L/2π along the edge direction.
    d1[j] = (L / kTwoPi / (s[e + 1] - s[e])) * (b - a);
  }
  return SampleGrid(std::move(p), std::move(d1), std::move(d2));
}

}  // namespace menger
