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
#include "qcopula/qsim/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "qcopula/error.hpp"
#include "qcopula/qsim/kernels.hpp"

namespace qcopula::qsim {

namespace {

std::atomic<Backend> g_backend{Backend::Parallel};

using kernels::ControlMask;
using kernels::Mat2;

ControlMask with(ControlMask c, int qubit, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    c.mask |= bit;
    if (value) {
        c.value |= bit;
    }
    return c;
}

Mat2 ry_matrix(double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return {c, -s, s, c};
}

const Mat2 &h_matrix() {
    static const Mat2 m{std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2,
                        std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2};
    return m;
}

template <class Ops>
void apply_impl(std::span<Amplitude> amps, const Gate &g, ControlMask ctrl) {
    switch (g.kind) {
    case GateKind::X:
        Ops::x(amps, g.targets[0], ctrl);
        break;
    case GateKind::H:
        Ops::one(amps, g.targets[0], h_matrix(), ctrl);
        break;
    case GateKind::Ry:
        Ops::one(amps, g.targets[0], ry_matrix(g.angle), ctrl);
        break;
    case GateKind::Phase:
        Ops::phase(amps, g.targets[0], std::polar(1.0, g.angle), ctrl);
        break;
    case GateKind::CNOT:
        Ops::x(amps, g.targets[1], with(ctrl, g.targets[0], true));
        break;
    case GateKind::SWAP:
        Ops::swap(amps, g.targets[0], g.targets[1], ctrl);
        break;
    case GateKind::Controlled: {
        ControlMask inner = ctrl;
        for (const auto &c : g.controls) {
            inner = with(inner, c.qubit, c.value);
        }
        for (const auto &b : g.body) {
            apply_impl<Ops>(amps, b, inner);
        }
        break;
    }
    }
}

struct SerialOps {
    static void x(std::span<Amplitude> a, int t, ControlMask c) {
        kernels::serial::apply_x(a, t, c);
    }
    static void one(std::span<Amplitude> a, int t, const Mat2 &m,
                    ControlMask c) {
        kernels::serial::apply_1q(a, t, m, c);
    }
    static void phase(std::span<Amplitude> a, int t, Amplitude p,
                      ControlMask c) {
        kernels::serial::apply_phase(a, t, p, c);
    }
    static void swap(std::span<Amplitude> a, int q0, int q1, ControlMask c) {
        kernels::serial::apply_swap(a, q0, q1, c);
    }
};

struct ParallelOps {
    static void x(std::span<Amplitude> a, int t, ControlMask c) {
        kernels::parallel::apply_x(a, t, c);
    }
    static void one(std::span<Amplitude> a, int t, const Mat2 &m,
                    ControlMask c) {
        kernels::parallel::apply_1q(a, t, m, c);
    }
    static void phase(std::span<Amplitude> a, int t, Amplitude p,
                      ControlMask c) {
        kernels::parallel::apply_phase(a, t, p, c);
    }
    static void swap(std::span<Amplitude> a, int q0, int q1, ControlMask c) {
        kernels::parallel::apply_swap(a, q0, q1, c);
    }
};

void apply_unchecked(std::span<Amplitude> amps, const Gate &g,
                     Backend backend) {
    if (backend == Backend::Serial) {
        apply_impl<SerialOps>(amps, g, {});
    } else {
        apply_impl<ParallelOps>(amps, g, {});
    }
}

void check_width(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 30) {
        throw BudgetExceeded("statevector width " + std::to_string(num_qubits) +
                             " outside [1, 30]");
    }
}

} // namespace

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
    check_width(num_qubits);
    amplitudes_.assign(std::uint64_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

Statevector::Statevector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_width(num_qubits);
    if (amplitudes_.size() != (std::uint64_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude count must equal 2^num_qubits");
    }
    if (std::abs(norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("statevector is not normalized");
    }
}

Statevector Statevector::basis(int num_qubits, std::uint64_t index) {
    Statevector s(num_qubits);
    if (index >= s.dimension()) {
        throw std::out_of_range("basis index outside register");
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

double Statevector::norm() const {
    return std::sqrt(kernels::serial::norm_squared(amplitudes_));
}

double DiscreteDistribution::total() const {
    double t = 0.0;
    for (double p : probabilities) {
        t += p;
    }
    return t;
}

void set_default_backend(Backend backend) { g_backend = backend; }
Backend default_backend() { return g_backend; }

void apply(Statevector &state, const Gate &gate, Backend backend) {
    validate_gate(gate, state.num_qubits());
    apply_unchecked(state.amplitudes(), gate, backend);
}

void apply(Statevector &state, const Gate &gate) {
    apply(state, gate, default_backend());
}

void apply(Statevector &state, const std::vector<Gate> &gates,
           Backend backend) {
    for (const auto &g : gates) {
        validate_gate(g, state.num_qubits());
    }
    for (const auto &g : gates) {
        apply_unchecked(state.amplitudes(), g, backend);
    }
}

void apply(Statevector &state, const std::vector<Gate> &gates) {
    apply(state, gates, default_backend());
}

Statevector apply_gate(Statevector state, const Gate &gate) {
    apply(state, gate);
    return state;
}

Statevector run(const Circuit &circuit, Backend backend) {
    Statevector state(circuit.num_qubits());
    for (const auto &g : circuit.gates()) {
        apply_unchecked(state.amplitudes(), g, backend);
    }
    return state;
}

Statevector run(const Circuit &circuit) {
    return run(circuit, default_backend());
}

Statevector run(const Circuit &circuit, Statevector initial) {
    if (initial.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("initial state width mismatch");
    }
    for (const auto &g : circuit.gates()) {
        apply_unchecked(initial.amplitudes(), g, default_backend());
    }
    return initial;
}

DiscreteDistribution distribution(const Statevector &state,
                                  const std::vector<int> &keep) {
    if (keep.empty()) {
        throw std::invalid_argument("distribution needs at least one qubit");
    }
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("duplicate qubit in keep set");
    }
    for (int q : keep) {
        if (q < 0 || q >= state.num_qubits()) {
            throw std::out_of_range("kept qubit outside register");
        }
    }
    DiscreteDistribution out{keep, std::vector<double>(
                                       std::uint64_t{1} << keep.size(), 0.0)};
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        std::uint64_t outcome = 0;
        for (std::size_t b = 0; b < keep.size(); ++b) {
            outcome |= ((i >> keep[b]) & 1u) << b;
        }
        out.probabilities[outcome] += std::norm(amps[i]);
    }
    return out;
}

DiscreteDistribution distribution(const Statevector &state) {
    DiscreteDistribution out;
    out.qubits.resize(static_cast<std::size_t>(state.num_qubits()));
    for (int q = 0; q < state.num_qubits(); ++q) {
        out.qubits[static_cast<std::size_t>(q)] = q;
    }
    out.probabilities.reserve(state.dimension());
    for (const auto &a : state.amplitudes()) {
        out.probabilities.push_back(std::norm(a));
    }
    return out;
}

Counts sample(const DiscreteDistribution &dist, std::uint64_t shots,
              std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be positive");
    }
    std::vector<double> cumulative(dist.probabilities.size());
    double running = 0.0;
    for (std::size_t i = 0; i < cumulative.size(); ++i) {
        running += dist.probabilities[i];
        cumulative[i] = running;
    }
    std::mt19937_64 engine(seed);
    Counts counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u =
            static_cast<double>(engine() >> 11) * 0x1.0p-53 * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) {
            // u rounded up to the total; take the last outcome with mass
            it = std::prev(cumulative.end());
            while (it != cumulative.begin() &&
                   dist.probabilities[static_cast<std::size_t>(
                       it - cumulative.begin())] == 0.0) {
                --it;
            }
        }
        ++counts[static_cast<std::uint64_t>(it - cumulative.begin())];
    }
    return counts;
}

Counts sample(const Statevector &state, std::uint64_t shots,
              std::uint64_t seed) {
    return sample(distribution(state), shots, seed);
}

Unitary circuit_unitary(const Circuit &circuit) {
    const int m = circuit.num_qubits();
    if (m > kMaxUnitaryQubits) {
        throw BudgetExceeded("unitary materialization is capped at " +
                             std::to_string(kMaxUnitaryQubits) + " qubits");
    }
    Unitary u{m, {}};
    const std::uint64_t dim = u.dimension();
    u.entries.assign(dim * dim, Amplitude{0.0, 0.0});
    const auto cols = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(dynamic) if (dim >= 64)
    for (std::int64_t j = 0; j < cols; ++j) {
        Statevector column =
            Statevector::basis(m, static_cast<std::uint64_t>(j));
        for (const auto &g : circuit.gates()) {
            apply_unchecked(column.amplitudes(), g, Backend::Serial);
        }
        const auto amps = column.amplitudes();
        for (std::uint64_t i = 0; i < dim; ++i) {
            u.entries[i * dim + static_cast<std::uint64_t>(j)] = amps[i];
        }
    }
    return u;
}

double unitarity_defect(const Unitary &u) {
    const std::uint64_t dim = u.dimension();
    double worst = 0.0;
    const auto rows = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(dynamic) reduction(max : worst) if (dim >= 64)
    for (std::int64_t ii = 0; ii < rows; ++ii) {
        const auto i = static_cast<std::uint64_t>(ii);
        for (std::uint64_t j = 0; j < dim; ++j) {
            Amplitude acc{0.0, 0.0};
            for (std::uint64_t r = 0; r < dim; ++r) {
                acc += std::conj(u(r, i)) * u(r, j);
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

} // namespace qcopula::qsim
