// Copyright 2026 The QPIE Authors
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

// Serial reference kernels against the OpenMP ones on the same inputs.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "qpie/filtering.hpp"
#include "qpie/kernels.hpp"

namespace {

using qpie::Complex;
namespace ks = qpie::kernels::serial;
namespace kp = qpie::kernels::parallel;

std::vector<Complex> random_amps(int n) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    std::normal_distribution<double> nd;
    std::vector<Complex> v(std::size_t{1} << n);
    for (auto& x : v) x = {nd(rng), nd(rng)};
    return v;
}

const qpie::kernels::Mat2 kHadamard{M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};

template <auto Kernel>
void BM_ApplySingle(benchmark::State& state) {
    auto amps = random_amps(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Kernel(amps, kHadamard, 0);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void BM_ApplyControlled(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = random_amps(n);
    const qpie::ComplexMatrix block = {{M_SQRT1_2, M_SQRT1_2}, {M_SQRT1_2, -M_SQRT1_2}};
    const std::array<unsigned, 1> targets{0};
    const std::uint64_t mask = (std::uint64_t{1} << (n - 1)) | (std::uint64_t{1} << (n - 2));
    for (auto _ : state) {
        Kernel(amps, mask, 0, targets, block);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void BM_SwapBits(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = random_amps(n);
    for (auto _ : state) {
        Kernel(amps, 0, static_cast<unsigned>(n - 1));
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void BM_RotateLeft(benchmark::State& state) {
    auto amps = random_amps(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Kernel(amps);
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void BM_OutcomeProbability(benchmark::State& state) {
    const auto amps = random_amps(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(amps, 0, 1));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <auto Kernel>
void BM_FilterOperator(benchmark::State& state) {
    const std::size_t side = static_cast<std::size_t>(state.range(0));
    const qpie::SparseOperator op = qpie::build_filter_operator(qpie::FilterMask::averaging(), side);
    std::vector<double> x(side * side, 1.0), y(side * side);
    for (auto _ : state) {
        Kernel(op.view(), x, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(op.nonzeros()));
}

}  // namespace

BENCHMARK(BM_ApplySingle<ks::apply_single>)->Name("serial/apply_single")->DenseRange(14, 20, 3);
BENCHMARK(BM_ApplySingle<kp::apply_single>)->Name("parallel/apply_single")->DenseRange(14, 20, 3);
BENCHMARK(BM_ApplyControlled<ks::apply_controlled>)->Name("serial/apply_controlled")->DenseRange(14, 20, 3);
BENCHMARK(BM_ApplyControlled<kp::apply_controlled>)->Name("parallel/apply_controlled")->DenseRange(14, 20, 3);
BENCHMARK(BM_SwapBits<ks::swap_bits>)->Name("serial/swap_bits")->DenseRange(14, 20, 3);
BENCHMARK(BM_SwapBits<kp::swap_bits>)->Name("parallel/swap_bits")->DenseRange(14, 20, 3);
BENCHMARK(BM_RotateLeft<ks::rotate_left>)->Name("serial/rotate_left")->DenseRange(14, 20, 3);
BENCHMARK(BM_RotateLeft<kp::rotate_left>)->Name("parallel/rotate_left")->DenseRange(14, 20, 3);
BENCHMARK(BM_OutcomeProbability<ks::outcome_probability>)->Name("serial/outcome_probability")->DenseRange(14, 20, 3);
BENCHMARK(BM_OutcomeProbability<kp::outcome_probability>)->Name("parallel/outcome_probability")->DenseRange(14, 20, 3);
BENCHMARK(BM_FilterOperator<ks::csr_multiply>)->Name("serial/filter_operator")->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_FilterOperator<kp::csr_multiply>)->Name("parallel/filter_operator")->RangeMultiplier(4)->Range(64, 1024);

BENCHMARK_MAIN();
