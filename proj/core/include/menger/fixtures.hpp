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

#include <cstdint>

#include "menger/knot.hpp"

namespace menger::fixtures {

/// Circle of radius r with n_modes modes (all but mode 1 zero).
FourierKnot circle(double r = 1.0, int n_modes = 20);

/**
 * Stadium: two straight segments of length 1 joined by half circles of
 * radius 1/2 (length π + 2), sampled by arclength and projected onto
 * n_modes modes.
 */
FourierKnot stadium(int n_modes = 20);

/// (sin t + 2 sin 2t, cos t - 2 cos 2t, -sin 3t), padded to n_modes >= 3.
FourierKnot trefoil(int n_modes = 3);

/// (2cos 3t + ½cos t + ½cos 5t, 2sin 3t + ½sin t + ½sin 5t, sin 4t),
/// padded to n_modes >= 5.
FourierKnot figure_eight(int n_modes = 5);

/// Unit circle plus a random perturbation whose mode-k amplitude is at most
/// amplitude/k^2. Deterministic for a given seed.
FourierKnot random_knot(int n_modes, std::uint64_t seed, double amplitude = 0.2);

/// Random direction with coefficients uniform in [-amplitude, amplitude].
FourierKnot random_direction(int n_modes, std::uint64_t seed, double amplitude = 1.0);

}  // namespace menger::fixtures
