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

#include "menger/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "menger/errors.hpp"

namespace menger {

namespace {

// Next non-blank, non-comment line; false at end of input.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

template <int K>
void parse_row(const std::string& line, double (&v)[K], const std::string& source,
               int lineno) {
  std::istringstream ss(line);
  for (int i = 0; i < K; ++i)
    if (!(ss >> v[i]))
      throw ParseError(source + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(K) + " numbers");
  std::string rest;
  if (ss >> rest)
    throw ParseError(source + ":" + std::to_string(lineno) + ": trailing content '" +
                     rest + "'");
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

FourierKnot parse_knot(std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) throw ParseError(source + ": empty coefficient file");
  double nv[1];
  parse_row(line, nv, source, lineno);
  const int N = static_cast<int>(nv[0]);
  if (N < 1 || nv[0] != N)
    throw ParseError(source + ":" + std::to_string(lineno) +
                     ": mode count must be a positive integer");
  std::vector<Vec3> a(N), b(N);
  for (int k = 0; k < N; ++k) {
    if (!next_line(in, line, lineno))
      throw ParseError(source + ": expected " + std::to_string(N) +
                       " coefficient rows, got " + std::to_string(k));
    double v[6];
    parse_row(line, v, source, lineno);
    a[k] = {v[0], v[1], v[2]};
    b[k] = {v[3], v[4], v[5]};
  }
  if (next_line(in, line, lineno))
    throw ParseError(source + ":" + std::to_string(lineno) + ": extra rows after " +
                     std::to_string(N) + " modes");
  try {
    return FourierKnot(std::move(a), std::move(b));
  } catch (const InvalidArgument& e) {
    throw ParseError(source + ": " + e.what());
  }
}

FourierKnot read_knot(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_knot(in, path.string());
}

void write_knot(std::ostream& out, const FourierKnot& knot) {
  out << knot.n_modes() << '\n';
  for (int k = 0; k < knot.n_modes(); ++k) {
    const Vec3& a = knot.cos_coeffs()[k];
    const Vec3& b = knot.sin_coeffs()[k];
    out << format_real(a.x, 17) << ' ' << format_real(a.y, 17) << ' '
        << format_real(a.z, 17) << ' ' << format_real(b.x, 17) << ' '
        << format_real(b.y, 17) << ' ' << format_real(b.z, 17) << '\n';
  }
}

void write_knot(const std::filesystem::path& path, const FourierKnot& knot) {
  auto out = open_out(path);
  write_knot(out, knot);
}

std::vector<Vec3> parse_points(std::istream& in, const std::string& source) {
  std::vector<Vec3> pts;
  std::string line;
  int lineno = 0;
  while (next_line(in, line, lineno)) {
    double v[3];
    parse_row(line, v, source, lineno);
    pts.push_back({v[0], v[1], v[2]});
    if (!is_finite(pts.back()))
      throw ParseError(source + ":" + std::to_string(lineno) + ": non-finite value");
  }
  return pts;
}

std::vector<Vec3> read_points(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_points(in, path.string());
}

void write_points(const std::filesystem::path& path, std::span<const Vec3> points) {
  auto out = open_out(path);
  for (const Vec3& p : points)
    out << format_real(p.x, 17) << ' ' << format_real(p.y, 17) << ' '
        << format_real(p.z, 17) << '\n';
}

std::string format_real(double v, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
  return buf;
}

}  // namespace menger
