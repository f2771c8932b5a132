// Copyright 2026 The qagency Authors
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

#include <cmath>

#include "qagency/agency.h"
#include "qagency/cloning.h"
#include "qagency/nogo.h"
#include "qagency/optimizer.h"

namespace {

using namespace qagency;

void BM_EvaluateCopies(benchmark::State &state) {
    const auto &spec = builtin_circuits()[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(spec, Regime::kCopies));
    }
    state.SetLabel(spec.name);
}
BENCHMARK(BM_EvaluateCopies)->DenseRange(0, 3);

void BM_EvaluateClones(benchmark::State &state) {
    const auto &spec = builtin_circuits()[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(spec, Regime::kClones));
    }
    state.SetLabel(spec.name);
}
BENCHMARK(BM_EvaluateClones)->DenseRange(0, 3);

void BM_SymmetricClone(benchmark::State &state) {
    const PureState psi(std::sqrt(0.75), std::sqrt(0.25));
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(symmetric_clone(psi, m));
    }
}
BENCHMARK(BM_SymmetricClone)->DenseRange(2, 6);

void BM_SelectorImpossibility(benchmark::State &state) {
    const PureState psi(std::sqrt(0.75), std::sqrt(0.25));
    const auto grid = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(selector_impossibility(gates::I(), gates::X(), psi, grid));
    }
}
BENCHMARK(BM_SelectorImpossibility)->Arg(4)->Arg(8)->Arg(16);

void BM_OptimizeIhx(benchmark::State &state) {
    const ParamSpace space(*find_builtin("Q_IHX"));
    OptimizeOptions options;
    options.budget = static_cast<std::size_t>(state.range(0));
    options.seed = 7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize(space, options));
    }
}
BENCHMARK(BM_OptimizeIhx)->Arg(0)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
