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

#include "menger/geometry.hpp"

#include "menger/errors.hpp"

namespace menger {

double inv_circumradius(const Vec3& X, const Vec3& Y, const Vec3& Z) {
  const Vec3 a = Y - X;
  const Vec3 b = Z - X;
  const double den = norm(a) * norm(Z - Y) * norm(b);
  if (den == 0.0) throw DegenerateError("inv_circumradius: coincident points");
  return 2.0 * norm(wedge(a, b)) / den;
}

double local_curvature(const Vec3& d1, const Vec3& d2) {
  const double s = norm(d1);
  if (s == 0.0) throw DegenerateError("local_curvature: zero first derivative");
  return norm(wedge(d1, d2)) / (s * s * s);
}

}  // namespace menger
