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
#include "qcopula/qsim/kernels.hpp"

#include <utility>

namespace qcopula::qsim::kernels {

namespace {

using Index = std::uint64_t;

/// Spreads `j` around a zero bit at position `bit`.
inline Index insert_zero(Index j, int bit) {
    const Index low = j & ((Index{1} << bit) - 1);
    return ((j >> bit) << (bit + 1)) | low;
}

inline bool selected(Index i, ControlMask c) {
    return (i & c.mask) == c.value;
}

inline void rotate_pair(Amplitude *amps, Index i0, Index i1, const Mat2 &m) {
    const Amplitude a0 = amps[i0];
    const Amplitude a1 = amps[i1];
    amps[i0] = m.m00 * a0 + m.m01 * a1;
    amps[i1] = m.m10 * a0 + m.m11 * a1;
}

inline std::pair<int, int> ordered(int a, int b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

} // namespace

namespace serial {

void apply_1q(std::span<Amplitude> amps, int target, const Mat2 &m,
              ControlMask ctrl) {
    const Index half = amps.size() / 2;
    const Index bit = Index{1} << target;
    Amplitude *data = amps.data();
    for (Index j = 0; j < half; ++j) {
        const Index i0 = insert_zero(j, target);
        if (selected(i0, ctrl)) {
            rotate_pair(data, i0, i0 | bit, m);
        }
    }
}

void apply_x(std::span<Amplitude> amps, int target, ControlMask ctrl) {
    const Index half = amps.size() / 2;
    const Index bit = Index{1} << target;
    for (Index j = 0; j < half; ++j) {
        const Index i0 = insert_zero(j, target);
        if (selected(i0, ctrl)) {
            std::swap(amps[i0], amps[i0 | bit]);
        }
    }
}

void apply_swap(std::span<Amplitude> amps, int a, int b, ControlMask ctrl) {
    const auto [lo, hi] = ordered(a, b);
    const Index quarter = amps.size() / 4;
    const Index bit_a = Index{1} << a;
    const Index bit_b = Index{1} << b;
    for (Index j = 0; j < quarter; ++j) {
        const Index base = insert_zero(insert_zero(j, lo), hi);
        if (selected(base, ctrl)) {
            std::swap(amps[base | bit_a], amps[base | bit_b]);
        }
    }
}

void apply_phase(std::span<Amplitude> amps, int target, Amplitude phase,
                 ControlMask ctrl) {
    const Index half = amps.size() / 2;
    const Index bit = Index{1} << target;
    for (Index j = 0; j < half; ++j) {
        const Index i0 = insert_zero(j, target);
        if (selected(i0, ctrl)) {
            amps[i0 | bit] *= phase;
        }
    }
}

double norm_squared(std::span<const Amplitude> amps) {
    double total = 0.0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

} // namespace serial

namespace parallel {

void apply_1q(std::span<Amplitude> amps, int target, const Mat2 &m,
              ControlMask ctrl) {
    const Index half = amps.size() / 2;
    const Index bit = Index{1} << target;
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (half >= kParallelThreshold)
    for (Index j = 0; j < half; ++j) {
        const Index i0 = insert_zero(j, target);
        if (selected(i0, ctrl)) {
            rotate_pair(data, i0, i0 | bit, m);
        }
    }
}

void apply_x(std::span<Amplitude> amps, int target, ControlMask ctrl) {
    const Index half = amps.size() / 2;
    const Index bit = Index{1} << target;
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (half >= kParallelThreshold)
    for (Index j = 0; j < half; ++j) {
        const Index i0 = insert_zero(j, target);
        if (selected(i0, ctrl)) {
            std::swap(data[i0], data[i0 | bit]);
        }
    }
}

void apply_swap(std::span<Amplitude> amps, int a, int b, ControlMask ctrl) {
    const auto [lo, hi] = ordered(a, b);
    const Index quarter = amps.size() / 4;
    const Index bit_a = Index{1} << a;
    const Index bit_b = Index{1} << b;
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (quarter >= kParallelThreshold)
    for (Index j = 0; j < quarter; ++j) {
        const Index base = insert_zero(insert_zero(j, lo), hi);
        if (selected(base, ctrl)) {
            std::swap(data[base | bit_a], data[base | bit_b]);
        }
    }
}

void apply_phase(std::span<Amplitude> amps, int target, Amplitude phase,
                 ControlMask ctrl) {
    const Index half = amps.size() / 2;
    const Index bit = Index{1} << target;
    Amplitude *data = amps.data();
#pragma omp parallel for schedule(static) if (half >= kParallelThreshold)
    for (Index j = 0; j < half; ++j) {
        const Index i0 = insert_zero(j, target);
        if (selected(i0, ctrl)) {
            data[i0 | bit] *= phase;
        }
    }
}

double norm_squared(std::span<const Amplitude> amps) {
    const Index n = amps.size();
    const Amplitude *data = amps.data();
    double total = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : total) if (n >= 2 * kParallelThreshold)
    for (Index i = 0; i < n; ++i) {
        total += std::norm(data[i]);
    }
    return total;
}

} // namespace parallel

} // namespace qcopula::qsim::kernels
