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

#include <benchmark/benchmark.h>

#include "menger/assembly.hpp"
#include "menger/energy.hpp"
#include "menger/fixtures.hpp"
#include "menger/flow.hpp"

namespace menger {
namespace {

const FourierKnot& knot() {
  static const FourierKnot k = fixtures::stadium(20);
  return k;
}

void BM_Energy(benchmark::State& st) {
  const SampleGrid g = build_grid(knot(), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(energy_report(g, 3.0));
}
BENCHMARK(BM_Energy)->Arg(64)->Arg(96)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_Sigma(benchmark::State& st) {
  const SampleGrid g = build_grid(knot(), static_cast<int>(st.range(0)));
  const PairTriples pt(g);
  for (auto _ : st) benchmark::DoNotOptimize(build_sigma(g, pt, 3.0, 1.0));
}
BENCHMARK(BM_Sigma)->Arg(64)->Arg(96)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_Assemble(benchmark::State& st) {
  const SampleGrid g = build_grid(knot(), static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(assemble(g, 3.0, EnergyKind::ep));
}
BENCHMARK(BM_Assemble)->Arg(64)->Arg(96)->Arg(160)->Unit(benchmark::kMillisecond);

void BM_Step(benchmark::State& st) {
  FlowConfig cfg;
  cfg.samples = static_cast<int>(st.range(0));
  const FlowState s = make_state(knot(), cfg);
  for (auto _ : st) benchmark::DoNotOptimize(step(s, cfg));
}
BENCHMARK(BM_Step)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace menger

BENCHMARK_MAIN();
