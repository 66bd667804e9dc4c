// Copyright 2026 The TVDP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <vector>

#include "benchmark/benchmark.h"
#include "tvdp/budget.h"
#include "tvdp/curves.h"

namespace tvdp {
namespace {

std::vector<TradeoffCurve> BudgetCurves(int n) {
  std::vector<TradeoffCurve> curves;
  for (int i = 0; i < n; ++i) {
    const double eps = 0.05 + 3.0 * i / n;
    const double delta = 0.1 * std::exp(-eps);
    curves.push_back(*CurveFromBudget({eps, delta, MaxEta(eps, delta)}));
  }
  return curves;
}

void BM_Intersect(benchmark::State& state) {
  const std::vector<TradeoffCurve> curves =
      BudgetCurves(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Intersect(curves));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Intersect)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_ValueAt(benchmark::State& state) {
  const TradeoffCurve curve = *Intersect(BudgetCurves(256));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(curve.ValueAt(t));
    t = t >= 1.0 ? 0.0 : t + 1e-3;
  }
}
BENCHMARK(BM_ValueAt);

}  // namespace
}  // namespace tvdp

BENCHMARK_MAIN();
