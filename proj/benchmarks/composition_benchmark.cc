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


#include "benchmark/benchmark.h"
#include "tvdp/budget.h"
#include "tvdp/composition.h"
#include "tvdp/mechanisms.h"

namespace tvdp {
namespace {

const PrivacyBudget kBudget{0.1, 1e-6, 0.03};

void BM_ComposeExact(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComposeExact(kBudget, k));
  }
  state.SetComplexityN(k);
}
BENCHMARK(BM_ComposeExact)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ComposeTypesApprox(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComposeTypesApprox(kBudget, k, 1e-9));
  }
  state.SetComplexityN(k);
}
BENCHMARK(BM_ComposeTypesApprox)
    ->RangeMultiplier(4)
    ->Range(16, 4096)
    ->Complexity();

void BM_ComposeKairouz(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComposeKairouz(kBudget.epsilon, kBudget.delta, k));
  }
}
BENCHMARK(BM_ComposeKairouz)->RangeMultiplier(4)->Range(16, 4096);

void BM_OracleCompose(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const DiscretePair pair = *DominatingApprox({1.0, 0.05, 0.3});
  const OracleMode mode = state.range(1) == 0 ? OracleMode::kDirect
                                              : OracleMode::kTyped;
  for (auto _ : state) {
    benchmark::DoNotOptimize(OracleCompose(pair, k, mode));
  }
}
BENCHMARK(BM_OracleCompose)->ArgsProduct({{2, 4, 6, 8}, {0, 1}});

}  // namespace
}  // namespace tvdp
