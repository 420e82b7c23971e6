// Copyright 2026 The lcuqml Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include <vector>

#include "lcuqml/groupproj.hpp"
#include "lcuqml/harness.hpp"
#include "lcuqml/lcu.hpp"
#include "lcuqml/pooling.hpp"
#include "lcuqml/qsim.hpp"
#include "lcuqml/resnet.hpp"

using namespace lcuqml;

namespace {

ImageGrid bench_image(int n) {
    const CVector a = haar_random_state(2 * ceil_log2(static_cast<std::uint64_t>(n)), 5).amplitudes();
    std::vector<double> px(static_cast<std::size_t>(n * n));
    for (std::size_t i = 0; i < px.size(); ++i) {
        px[i] = std::abs(a[static_cast<Eigen::Index>(i)]);
    }
    return ImageGrid::from_pixels(n, std::move(px));
}

void BM_DenseTwoQubitGate(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    CVector amps = haar_random_state(n, 1).amplitudes();
    const auto g = GateAction::dense({n / 2, n / 2 + 1}, haar_random_unitary(4, 2));
    for (auto _ : state) {
        apply_gate_inplace(amps, n, g);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_DenseTwoQubitGate)->DenseRange(10, 20, 5);

void BM_ShiftPermutation(benchmark::State &state) {
    const int b = static_cast<int>(state.range(0));
    CVector amps = haar_random_state(2 * b, 1).amplitudes();
    const auto g = shift_operator({Axis::Y, 3, ShiftDirection::Subtract}, b);
    for (auto _ : state) {
        apply_gate_inplace(amps, 2 * b, g);
        benchmark::DoNotOptimize(amps.data());
    }
}
BENCHMARK(BM_ShiftPermutation)->DenseRange(3, 9, 3);

void BM_PoolImage(benchmark::State &state) {
    const auto img = bench_image(static_cast<int>(state.range(0)));
    const PoolingSpec spec{static_cast<int>(state.range(1)), BoundaryMode::Periodic};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pool_image(img, spec).outcome.pi_success);
    }
}
BENCHMARK(BM_PoolImage)->Args({16, 3})->Args({32, 3})->Args({32, 8});

void BM_PoolingProbabilityFormula(benchmark::State &state) {
    const auto img = bench_image(28);
    const PoolingSpec spec{static_cast<int>(state.range(0)), BoundaryMode::Periodic};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pooling_success_probability(img, spec));
    }
}
BENCHMARK(BM_PoolingProbabilityFormula)->Arg(3)->Arg(8);

void BM_ProjectionProgramS4(benchmark::State &state) {
    const auto g = symmetric_group(4);
    const auto rep = swap_rep(g, static_cast<int>(state.range(0)));
    const auto psi = haar_random_state(4 * static_cast<int>(state.range(0)), 3);
    const auto prog = build_projection_program(g, rep, {{1.0, 0.5, 0.25, 0.5, 1.0}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_lcu(prog, psi).pi_success);
    }
}
BENCHMARK(BM_ProjectionProgramS4)->Arg(1)->Arg(2);

void BM_ResidualForward(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<ResidualLayer> layers;
    for (std::uint64_t l = 0; l < 4; ++l) {
        layers.push_back({param_circuit_gates(random_param_circuit(n, {"XY", "YX", "YZ"}, 5, l)), 0.5});
    }
    const Statevector psi(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(resnet_forward(layers, psi).pi_total);
    }
}
BENCHMARK(BM_ResidualForward)->Arg(4)->Arg(8)->Arg(12);

void BM_KernelAndSvm(benchmark::State &state) {
    std::vector<Statevector> states;
    std::vector<int> labels;
    const auto m = static_cast<std::uint64_t>(state.range(0));
    for (std::uint64_t i = 0; i < m; ++i) {
        states.push_back(haar_random_state(6, i));
        labels.push_back(i % 2 == 0 ? 1 : -1);
    }
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
    for (std::size_t i = 0; i < m; ++i) {
        (i % 5 == 4 ? test : train).push_back(i);
    }
    for (auto _ : state) {
        const auto k = compute_kernel(states);
        benchmark::DoNotOptimize(svm_train_predict(k, labels, train, test).accuracy);
    }
}
BENCHMARK(BM_KernelAndSvm)->Arg(100)->Arg(400);

} // namespace

BENCHMARK_MAIN();
