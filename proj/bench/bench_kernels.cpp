// Copyright 2026 The qcopula Authors

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

#include <cmath>
#include <vector>

#include "qcopula/circuits.hpp"
#include "qcopula/qsim/kernels.hpp"
#include "qcopula/qsim/simulator.hpp"

using namespace qcopula;
using qcopula::qsim::kernels::Amplitude;
using qcopula::qsim::kernels::ControlMask;
using qcopula::qsim::kernels::Mat2;

namespace {

std::vector<Amplitude> uniform_state(int qubits) {
    const std::size_t dim = std::size_t{1} << qubits;
    return std::vector<Amplitude>(dim, Amplitude(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
}

const Mat2 kRy{std::cos(0.3), -std::sin(0.3), std::sin(0.3), std::cos(0.3)};

template <bool Parallel> void BM_Apply1q(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = uniform_state(n);
    int target = 0;
    for (auto _ : state) {
        if constexpr (Parallel) {
            qsim::kernels::parallel::apply_1q(amps, target, kRy, {});
        } else {
            qsim::kernels::serial::apply_1q(amps, target, kRy, {});
        }
        target = (target + 1) % n;
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <bool Parallel> void BM_ControlledX(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto amps = uniform_state(n);
    const ControlMask ctrl{0b11, 0b01};
    for (auto _ : state) {
        if constexpr (Parallel) {
            qsim::kernels::parallel::apply_x(amps, n - 1, ctrl);
        } else {
            qsim::kernels::serial::apply_x(amps, n - 1, ctrl);
        }
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}

template <bool Parallel> void BM_Norm(benchmark::State &state) {
    const auto amps = uniform_state(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        if constexpr (Parallel) {
            benchmark::DoNotOptimize(qsim::kernels::parallel::norm_squared(amps));
        } else {
            benchmark::DoNotOptimize(qsim::kernels::serial::norm_squared(amps));
        }
    }
}

template <qsim::Backend B> void BM_RunB11(benchmark::State &state) {
    const auto c = circuits::build_b11_pure(0.5, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsim::run(c, B));
    }
}

} // namespace

BENCHMARK(BM_Apply1q<false>)->DenseRange(12, 22, 5);
BENCHMARK(BM_Apply1q<true>)->DenseRange(12, 22, 5);
BENCHMARK(BM_ControlledX<false>)->DenseRange(12, 22, 5);
BENCHMARK(BM_ControlledX<true>)->DenseRange(12, 22, 5);
BENCHMARK(BM_Norm<false>)->DenseRange(12, 22, 5);
BENCHMARK(BM_Norm<true>)->DenseRange(12, 22, 5);
BENCHMARK(BM_RunB11<qsim::Backend::Serial>)->DenseRange(4, 8, 2);
BENCHMARK(BM_RunB11<qsim::Backend::Parallel>)->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
