// Copyright 2026 The zxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "zxcut/circuit.hpp"
#include "zxcut/circuit_gen.hpp"
#include "zxcut/decomposer.hpp"
#include "zxcut/oracle.hpp"
#include "zxcut/procedure.hpp"
#include "zxcut/simplify.hpp"

namespace zxcut {
namespace {

Diagram circuit(int scale, std::uint64_t seed = 11) {
  return plug_plus(build_from_gates(generate({6, 2 * scale, scale, 2 * scale, 2 * scale, seed})));
}

void BM_FullSimplify(benchmark::State& state) {
  const Diagram d = circuit(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Diagram e = d;
    full_simplify(e);
    benchmark::DoNotOptimize(e.t_count());
  }
}
BENCHMARK(BM_FullSimplify)->DenseRange(1, 5);

void BM_PartialSimplify(benchmark::State& state) {
  const Diagram d = circuit(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Diagram e = d;
    partial_simplify(e);
    benchmark::DoNotOptimize(e.t_count());
  }
}
BENCHMARK(BM_PartialSimplify)->DenseRange(1, 5);

void BM_ProcedureBlind(benchmark::State& state) {
  const Diagram d = circuit(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_procedure(d, ProcedureMode::Blind).terms);
}
BENCHMARK(BM_ProcedureBlind)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_ProcedureExact(benchmark::State& state) {
  const Diagram d = circuit(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_procedure(d, ProcedureMode::Exact).value);
}
BENCHMARK(BM_ProcedureExact)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_BssDriver(benchmark::State& state) {
  Diagram d = circuit(static_cast<int>(state.range(0)));
  full_simplify(d);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_bss_driver(d).sum);
}
BENCHMARK(BM_BssDriver)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_OracleScalar(benchmark::State& state) {
  const Diagram d = circuit(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_scalar(d));
}
BENCHMARK(BM_OracleScalar)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace zxcut

BENCHMARK_MAIN();
