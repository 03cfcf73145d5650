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
#include "qcopula/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcopula/error.hpp"
#include "qcopula/synth.hpp"

namespace qcopula::circuits {

using copula::BasicMb11Spec;
using copula::SetPartition;
using qsim::Control;
using qsim::Gate;
using qsim::Layout;
namespace gates = qsim::gates;

namespace {

int qubit(int var, int level, int k) { return var * k + level; }

Layout variable_layout(int n, int k, std::vector<int> controls = {}) {
    Layout layout;
    for (int v = 0; v < n; ++v) {
        std::vector<int> qs;
        for (int l = 0; l < k; ++l) {
            qs.push_back(qubit(v, l, k));
        }
        layout.variables.push_back(std::move(qs));
    }
    layout.controls = std::move(controls);
    return layout;
}

void check_resolution(int k) {
    if (k < 1) {
        throw std::invalid_argument("resolution k must be at least 1");
    }
}

void check_register(int qubits) {
    if (qubits > kMaxMixedQubits) {
        throw BudgetExceeded("circuit needs " + std::to_string(qubits) +
                             " qubits, limit is " +
                             std::to_string(kMaxMixedQubits));
    }
}

// Gates realizing one canonical copula on the variable qubits.
std::vector<Gate> canonical_block(const SetPartition &part, int k) {
    std::vector<Gate> out;
    const int n = part.size();
    for (int v = 0; v < n; ++v) {
        int seed = 0;
        while (part.block_of(seed) != part.block_of(v)) {
            ++seed;
        }
        for (int l = 0; l < k; ++l) {
            if (seed == v) {
                out.push_back(gates::h(qubit(v, l, k)));
            } else {
                out.push_back(gates::cnot(qubit(seed, l, k), qubit(v, l, k)));
                if (part.negated(v)) {
                    out.push_back(gates::x(qubit(v, l, k)));
                }
            }
        }
    }
    // Seeds are always lower-numbered than their members, so all H gates on a
    // seed precede the CNOTs reading it.
    return out;
}

std::vector<Control> bits_as_controls(std::uint64_t value,
                                      const std::vector<int> &qubits) {
    std::vector<Control> out;
    const auto width = qubits.size();
    for (std::size_t i = 0; i < width; ++i) {
        out.push_back({qubits[i], ((value >> (width - 1 - i)) & 1u) != 0});
    }
    return out;
}

int ceil_log2(std::size_t m) {
    int bits = 0;
    while ((std::size_t{1} << bits) < m) {
        ++bits;
    }
    return bits;
}

} // namespace

Circuit build_fundamental(Fundamental kind, int k, int n) {
    check_resolution(k);
    if (n < 2 || (kind != Fundamental::Pi && n != 2)) {
        throw std::invalid_argument("M2 and W2 are bivariate; Pi needs n >= 2");
    }
    check_register(n * k);
    Circuit c(n * k, variable_layout(n, k));
    if (kind == Fundamental::Pi) {
        for (int q = 0; q < n * k; ++q) {
            c.append(gates::h(q));
        }
        return c;
    }
    const auto part = kind == Fundamental::M2 ? SetPartition::comonotone(2)
                                              : SetPartition({{1, -2}});
    c.append(canonical_block(part, k));
    return c;
}

double b11_level_alpha(double alpha, int level) {
    if (level < 1) {
        throw std::invalid_argument("digit level starts at 1");
    }
    const double scale = std::ldexp(1.0, level - 1);
    return scale * alpha / (1.0 + (scale - 1.0) * alpha);
}

Circuit build_b11_pure(double alpha, int k) {
    check_resolution(k);
    if (!(alpha >= -1.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in [-1, 1]");
    }
    if (alpha < 0.0 && k > 1) {
        throw std::invalid_argument(
            "negative alpha is only a pure-state copula for k = 1");
    }
    Circuit c(2 * k, variable_layout(2, k));
    // Qubit (1, l) first holds the difference digit a_l xor b_l.
    for (int l = 0; l < k; ++l) {
        c.append(gates::h(qubit(0, l, k)));
        const double a = b11_level_alpha(alpha, l + 1);
        const Gate rot = gates::ry(qubit(1, l, k),
                                   synth::bernoulli_angle((1.0 - a) / 2.0));
        if (l == 0) {
            c.append(rot);
            continue;
        }
        std::vector<Control> equal;
        for (int j = 0; j < l; ++j) {
            equal.push_back({qubit(1, j, k), false});
        }
        c.append(gates::controlled(equal, {rot}));
        for (int j = 0; j < l; ++j) {
            std::vector<Control> first_diff(equal.begin(), equal.begin() + j);
            first_diff.push_back({qubit(1, j, k), true});
            c.append(gates::controlled(first_diff, {gates::h(qubit(1, l, k))}));
        }
    }
    for (int l = 0; l < k; ++l) {
        c.append(gates::cnot(qubit(0, l, k), qubit(1, l, k)));
    }
    return c;
}

double mn_pin_reference_angle(double alpha) {
    return 2.0 * std::asin(std::sqrt(1.0 - alpha) /
                           (std::numbers::sqrt2 * std::sqrt(1.0 + alpha)));
}

Circuit build_mn_pin(double alpha, int n) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1]");
    }
    if (n < 2 || n > kMaxMixedQubits) {
        throw std::invalid_argument("n must lie in [2, 22]");
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> pdf(dim, (1.0 - alpha) / static_cast<double>(dim));
    pdf.front() += alpha / 2.0;
    pdf.back() += alpha / 2.0;
    std::vector<int> qubits(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        qubits[static_cast<std::size_t>(v)] = v;
    }
    Circuit c(n, variable_layout(n, 1));
    c.append(synth::conditional_loader(pdf, qubits));
    return c;
}

Circuit build_b11_mixed(double alpha, int k) {
    check_resolution(k);
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1]");
    }
    const int ctrl = 2 * k;
    check_register(ctrl + 1);
    Circuit c(ctrl + 1, variable_layout(2, k, {ctrl}));
    c.append(gates::ry(ctrl, synth::bernoulli_angle(alpha)));
    c.append(gates::controlled({{ctrl, true}},
                               canonical_block(SetPartition::comonotone(2), k)));
    c.append(gates::controlled({{ctrl, false}},
                               canonical_block(SetPartition::independence(2), k)));
    return c;
}

Circuit build_mb11_mixed(const Mb11Spec &spec, int k) {
    check_resolution(k);
    spec.validate();
    std::vector<std::pair<SetPartition, double>> active;
    for (const auto &e : spec.entries) {
        if (e.second > 0.0) {
            active.push_back(e);
        }
    }
    const int n = spec.n;
    const int width = ceil_log2(active.size());
    const int total = n * k + width;
    check_register(total);
    std::vector<int> ctrl;
    for (int i = 0; i < width; ++i) {
        ctrl.push_back(n * k + i);
    }
    Circuit c(total, variable_layout(n, k, ctrl));
    if (width == 0) {
        c.append(canonical_block(active.front().first, k));
        return c;
    }
    std::vector<double> weights;
    for (const auto &e : active) {
        weights.push_back(e.second);
    }
    if (active.size() == 5) {
        c.append(synth::synth3_5(weights, ctrl[0], ctrl[1], ctrl[2]));
    } else {
        double sum = 0.0;
        for (double w : weights) {
            sum += w;
        }
        for (double &w : weights) {
            w /= sum;
        }
        weights.resize(std::size_t{1} << width, 0.0);
        c.append(synth::conditional_loader(weights, ctrl));
    }
    for (std::size_t j = 0; j < active.size(); ++j) {
        c.append(gates::controlled(bits_as_controls(j, ctrl),
                                   canonical_block(active[j].first, k)));
    }
    return c;
}

template <class Scalar>
Scalar pattern_factor(const SetPartition &part, unsigned bits) {
    const int n = part.size();
    auto bit = [&](int v) { return (bits >> (n - 1 - v)) & 1u; };
    std::vector<int> seed(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const unsigned b = bit(v) ^ (part.negated(v) ? 1u : 0u);
        int &s = seed[static_cast<std::size_t>(part.block_of(v))];
        if (s < 0) {
            s = static_cast<int>(b);
        } else if (s != static_cast<int>(b)) {
            return Scalar(0);
        }
    }
    return Scalar(1) / Scalar(1LL << part.num_blocks());
}

template <class Scalar>
std::array<Scalar, 4> cqg_probabilities(const BasicMb11Spec<Scalar> &spec) {
    spec.validate();
    if (spec.n != 3) {
        throw std::invalid_argument("trivariate spec expected");
    }
    std::array<Scalar, 4> out{};
    for (unsigned r = 0; r < 4; ++r) {
        Scalar p(0);
        for (const auto &[part, w] : spec.entries) {
            p += w * pattern_factor<Scalar>(part, r);
        }
        out[r] = p;
    }
    return out;
}

template <class Scalar>
std::vector<Scalar> pure3_child_weights(const BasicMb11Spec<Scalar> &spec,
                                        std::span<const int> context) {
    std::vector<Scalar> w;
    Scalar mass(0);
    for (const auto &[part, weight] : spec.entries) {
        Scalar u = weight;
        for (int r : context) {
            if (r < 0 || r > 3) {
                throw std::invalid_argument("reduced pattern must be 0..3");
            }
            u *= pattern_factor<Scalar>(part, static_cast<unsigned>(r));
        }
        w.push_back(u);
        mass += u;
    }
    if (mass == Scalar(0)) {
        throw std::domain_error("context has zero probability");
    }
    for (auto &u : w) {
        u /= mass;
    }
    return w;
}

template double pattern_factor<double>(const SetPartition &, unsigned);
template copula::Rational pattern_factor<copula::Rational>(const SetPartition &,
                                                           unsigned);
template std::array<double, 4> cqg_probabilities(const Mb11Spec &);
template std::array<copula::Rational, 4>
cqg_probabilities(const copula::ExactMb11Spec &);
template std::vector<double> pure3_child_weights(const Mb11Spec &,
                                                 std::span<const int>);
template std::vector<copula::Rational>
pure3_child_weights(const copula::ExactMb11Spec &, std::span<const int>);

Circuit build_mb11_pure3(const Mb11Spec &spec, int k) {
    check_resolution(k);
    spec.validate();
    if (spec.n != 3) {
        throw std::invalid_argument("trivariate spec expected");
    }
    check_register(3 * k);
    const auto m = spec.entries.size();
    std::vector<std::array<double, 4>> factor(m);
    for (std::size_t c = 0; c < m; ++c) {
        for (unsigned r = 0; r < 4; ++r) {
            factor[c][r] = pattern_factor<double>(spec.entries[c].first, r);
        }
    }
    Circuit circ(3 * k, variable_layout(3, k));
    // Qubits (1, l) and (2, l) hold difference digits against variable 0
    // until the closing CNOT layer.
    for (int l = 0; l < k; ++l) {
        circ.append(gates::h(qubit(0, l, k)));
        const std::uint64_t contexts = std::uint64_t{1} << (2 * l);
        for (std::uint64_t ctx = 0; ctx < contexts; ++ctx) {
            std::vector<double> u(m);
            double mass = 0.0;
            std::vector<Control> controls;
            for (std::size_t c = 0; c < m; ++c) {
                u[c] = spec.entries[c].second;
            }
            for (int j = 0; j < l; ++j) {
                const unsigned r = (ctx >> (2 * (l - 1 - j))) & 3u;
                for (std::size_t c = 0; c < m; ++c) {
                    u[c] *= factor[c][r];
                }
                controls.push_back({qubit(1, j, k), (r & 2u) != 0});
                controls.push_back({qubit(2, j, k), (r & 1u) != 0});
            }
            for (double x : u) {
                mass += x;
            }
            if (mass == 0.0) {
                continue;
            }
            std::vector<double> target(4, 0.0);
            for (unsigned r = 0; r < 4; ++r) {
                for (std::size_t c = 0; c < m; ++c) {
                    target[r] += 2.0 * u[c] / mass * factor[c][r];
                }
            }
            auto body = synth::synth2(target, qubit(1, l, k), qubit(2, l, k));
            circ.append(qsim::controlled_fragment(controls, std::move(body)));
        }
    }
    for (int l = 0; l < k; ++l) {
        circ.append(gates::cnot(qubit(0, l, k), qubit(1, l, k)));
        circ.append(gates::cnot(qubit(0, l, k), qubit(2, l, k)));
    }
    return circ;
}

Circuit build_frechet3_pure(const Mb11Spec &spec, int k) {
    return build_mb11_pure3(spec, k);
}

std::array<double, 3> benchmark4_control_angles() {
    const double phi1 = 2.0 * std::acos(std::sqrt(2.0 / 3.0));
    const double phi2 = 2.0 * std::acos(0.5 * std::sqrt(2.0 + std::sqrt(2.0)));
    const double phi3 = 2.0 * std::acos(-0.5 * std::sqrt(2.0 - std::sqrt(2.0)));
    return {phi1, phi2, phi3};
}

copula::ExactMb11Spec benchmark4_spec() {
    const copula::Rational third(1, 3);
    copula::ExactMb11Spec spec{4, {}};
    spec.entries.emplace_back(SetPartition::parse("{{1,4},{2},{3}}"), third);
    spec.entries.emplace_back(SetPartition::parse("{{1},{2,4},{3}}"), third);
    spec.entries.emplace_back(SetPartition::parse("{{1},{2},{3,4}}"), third);
    return spec;
}

Circuit build_benchmark4(int k) {
    check_resolution(k);
    const int c1 = 4 * k;
    const int c2 = c1 + 1;
    check_register(c2 + 1);
    Circuit c(c2 + 1, variable_layout(4, k, {c1, c2}));
    const auto [phi1, phi2, phi3] = benchmark4_control_angles();
    c.append(gates::ry(c1, phi1));
    c.append(gates::ry(c2, phi2));
    c.append(gates::cnot(c1, c2));
    c.append(gates::ry(c2, phi3));
    for (int v = 0; v < 3; ++v) {
        for (int l = 0; l < k; ++l) {
            c.append(gates::h(qubit(v, l, k)));
        }
    }
    for (int v = 0; v < 3; ++v) {
        std::vector<Gate> copy;
        for (int l = 0; l < k; ++l) {
            copy.push_back(gates::cnot(qubit(v, l, k), qubit(3, l, k)));
        }
        c.append(gates::controlled({{c1, v == 2}, {c2, v == 1}}, copy));
    }
    return c;
}

std::uint64_t generic_synthesizer_count(int n, int k) {
    if (n < 1 || k < 1 || n * k > 63) {
        throw std::invalid_argument("n and k must be positive, n k <= 63");
    }
    return ((std::uint64_t{1} << (n * k)) - 1) / ((std::uint64_t{1} << n) - 1);
}

GenericCircuit build_generic(const CopulaGrid &grid) {
    const int n = grid.dimension();
    const int k = grid.resolution();
    if (n != 2 && n != 3) {
        throw std::invalid_argument("generic loader supports n = 2 or 3");
    }
    check_resolution(k);
    check_register(n * k);
    grid.check_margins(1e-9);

    // coarse[r] holds the grid aggregated to the top r digits per variable.
    std::vector<std::vector<double>> coarse(static_cast<std::size_t>(k) + 1);
    coarse[static_cast<std::size_t>(k)].assign(grid.cells().begin(),
                                               grid.cells().end());
    for (int r = k - 1; r >= 0; --r) {
        auto &fine = coarse[static_cast<std::size_t>(r) + 1];
        auto &out = coarse[static_cast<std::size_t>(r)];
        out.assign(std::size_t{1} << (n * r), 0.0);
        for (std::size_t idx = 0; idx < fine.size(); ++idx) {
            std::size_t parent = 0;
            for (int v = 0; v < n; ++v) {
                const std::size_t cell = (idx >> ((r + 1) * (n - 1 - v))) &
                                         ((std::size_t{1} << (r + 1)) - 1);
                parent |= (cell >> 1) << (r * (n - 1 - v));
            }
            out[parent] += fine[idx];
        }
    }

    GenericCircuit result{Circuit(n * k, variable_layout(n, k)), 0};
    const std::size_t combos = std::size_t{1} << n;
    for (int l = 0; l < k; ++l) {
        std::vector<int> targets;
        for (int v = 0; v < n; ++v) {
            targets.push_back(qubit(v, l, k));
        }
        const auto &parent = coarse[static_cast<std::size_t>(l)];
        const auto &child = coarse[static_cast<std::size_t>(l) + 1];
        for (std::size_t ctx = 0; ctx < parent.size(); ++ctx) {
            const double mass = parent[ctx];
            if (mass <= 0.0) {
                continue;
            }
            std::vector<double> pdf(combos, 0.0);
            for (std::size_t b = 0; b < combos; ++b) {
                std::size_t idx = 0;
                for (int v = 0; v < n; ++v) {
                    const std::size_t prefix =
                        (ctx >> (l * (n - 1 - v))) & ((std::size_t{1} << l) - 1);
                    const std::size_t digit = (b >> (n - 1 - v)) & 1u;
                    idx |= ((prefix << 1) | digit) << ((l + 1) * (n - 1 - v));
                }
                pdf[b] = std::max(child[idx], 0.0) / mass;
            }
            double sum = 0.0;
            for (double p : pdf) {
                sum += p;
            }
            for (double &p : pdf) {
                p /= sum;
            }
            std::vector<Control> controls;
            for (int v = 0; v < n; ++v) {
                for (int j = 0; j < l; ++j) {
                    const bool bit =
                        ((ctx >> (l * (n - 1 - v) + (l - 1 - j))) & 1u) != 0;
                    controls.push_back({qubit(v, j, k), bit});
                }
            }
            auto body = synth::conditional_loader(pdf, targets);
            result.circuit.append(
                qsim::controlled_fragment(controls, std::move(body)));
            ++result.synthesizers;
        }
    }
    return result;
}

Circuit build_fabric(const copula::FabricParams &params) {
    params.validate();
    const int groups = params.groups();
    const int k = params.levels();
    if (groups < 1) {
        throw std::invalid_argument("fabric copula needs at least one group");
    }
    check_resolution(k);
    const int n = groups + 1;
    check_register(n * k);
    Circuit c(n * k, variable_layout(n, k));
    for (int l = 0; l < k; ++l) {
        c.append(gates::h(qubit(0, l, k)));
        for (int j = 0; j < groups; ++j) {
            const double p = params.p[static_cast<std::size_t>(j)]
                                     [static_cast<std::size_t>(l)];
            const int q = qubit(j + 1, l, k);
            c.append(gates::ry(q, synth::bernoulli_angle((1.0 - p) / 2.0)));
            c.append(gates::cnot(qubit(0, l, k), q));
        }
    }
    return c;
}

CopulaGrid copula_grid(const qsim::Statevector &state, const Layout &layout) {
    const int n = static_cast<int>(layout.variables.size());
    const int k = static_cast<int>(layout.resolution());
    if (n == 0 || k == 0) {
        throw std::invalid_argument("layout has no copula variables");
    }
    const auto keep = layout.copula_qubits();
    for (int q : keep) {
        if (q < 0 || q >= state.num_qubits()) {
            throw std::out_of_range("layout qubit outside the register");
        }
    }
    CopulaGrid grid(n, k);
    const auto amps = state.amplitudes();
    const int width = n * k;
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        const double p = std::norm(amps[b]);
        if (p == 0.0) {
            continue;
        }
        std::size_t flat = 0;
        for (int i = 0; i < width; ++i) {
            flat |= static_cast<std::size_t>((b >> keep[static_cast<std::size_t>(i)]) & 1u)
                    << (width - 1 - i);
        }
        grid[flat] += p;
    }
    return grid;
}

CopulaGrid simulate_grid(const Circuit &circuit) {
    return copula_grid(qsim::run(circuit), circuit.layout());
}

} // namespace qcopula::circuits
