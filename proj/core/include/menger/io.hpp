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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "menger/knot.hpp"

namespace menger {

/**
 * Coefficient file: first line N, then N lines
 * "a_k.x a_k.y a_k.z b_k.x b_k.y b_k.z". Blank lines and lines starting with
 * '#' are ignored.
 *
 * @throws ParseError naming the path on a missing file or malformed content.
 */
FourierKnot read_knot(const std::filesystem::path& path);
FourierKnot parse_knot(std::istream& in, const std::string& source = "<stream>");

/// Writes with 17 significant digits so a reload reproduces every bit.
void write_knot(const std::filesystem::path& path, const FourierKnot& knot);
void write_knot(std::ostream& out, const FourierKnot& knot);

/// Polygon / point file: one "x y z" row per vertex, closed implicitly.
std::vector<Vec3> read_points(const std::filesystem::path& path);
std::vector<Vec3> parse_points(std::istream& in, const std::string& source = "<stream>");
void write_points(const std::filesystem::path& path, std::span<const Vec3> points);

/// printf("%.*g") formatting.
std::string format_real(double v, int significant_digits);

}  // namespace menger
