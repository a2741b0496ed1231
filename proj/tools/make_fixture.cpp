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

// Writes one of the built-in test knots as a coefficient file.

#include <cstdlib>
#include <iostream>
#include <string>

#include "menger/fixtures.hpp"
#include "menger/io.hpp"

int main(int argc, char** argv) {
  using namespace menger;
  if (argc != 3) {
    std::cerr << "usage: menger_fixture circle|stadium|trefoil|figure-eight <out>\n";
    return 2;
  }
  const std::string name = argv[1];
  if (name == "circle")
    write_knot(argv[2], fixtures::circle(1.0, 20));
  else if (name == "stadium")
    write_knot(argv[2], fixtures::stadium(20));
  else if (name == "trefoil")
    write_knot(argv[2], fixtures::trefoil(3));
  else if (name == "figure-eight")
    write_knot(argv[2], fixtures::figure_eight(5));
  else {
    std::cerr << "unknown fixture '" << name << "'\n";
    return 2;
  }
  return 0;
}
