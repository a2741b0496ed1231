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

#include <vector>

#include "menger/energy.hpp"
#include "menger/knot.hpp"
#include "menger/pair_triples.hpp"

namespace menger {

/// A test direction Φ sampled on the parameters of a grid. Unlike a
/// SampleGrid it may vanish anywhere.
struct DirectionSamples {
  std::vector<Vec3> p, d1, d2;
};

DirectionSamples sample_direction(const FourierKnot& phi, int M);

/// δL(γ,Φ) = h Σ p'_i·Φ'_i / |p'_i|.
double delta_length(const SampleGrid& grid, const DirectionSamples& phi);
double delta_length(const SampleGrid& grid, const FourierKnot& phi);

/**
 * First variation of the discrete M_p in direction Φ: strict triples use
 * the symmetric sum over all six orderings, the two-point and curvature
 * diagonals their own closed forms. This is the exact derivative of
 * menger_sum along γ + τΦ. Scaled by the same factor as menger_sum.
 */
ScaledSum delta_menger_sum(const SampleGrid& grid, const PairTriples& pt,
                           const DirectionSamples& phi, double p);

double delta_mp(const SampleGrid& grid, const FourierKnot& phi, double p);

/// (M_p/L^3)^{1/p} (L/(p M_p) δM_p + (p-3)/p δL).
double delta_ep(const SampleGrid& grid, const FourierKnot& phi, double p);

/// (1/p) M_p^{1/p-1} δM_p + λ δL.
double delta_ep_lambda(const SampleGrid& grid, const FourierKnot& phi, double p,
                       double lambda);

}  // namespace menger
