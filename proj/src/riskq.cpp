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
#include "qcopula/riskq.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcopula/circuits.hpp"
#include "qcopula/error.hpp"
#include "qcopula/qsim/simulator.hpp"

namespace qcopula::riskq {

using qsim::Control;
namespace gates = qsim::gates;

namespace {

std::vector<std::size_t> cells_of(std::size_t flat, int n, int k) {
    std::vector<std::size_t> cells(static_cast<std::size_t>(n));
    const std::size_t mask = (std::size_t{1} << k) - 1;
    for (int v = 0; v < n; ++v) {
        cells[static_cast<std::size_t>(v)] = (flat >> (k * (n - 1 - v))) & mask;
    }
    return cells;
}

std::vector<Control> cell_controls(const Layout &layout,
                                   const std::vector<std::size_t> &cells) {
    std::vector<Control> out;
    const int k = static_cast<int>(layout.resolution());
    for (std::size_t v = 0; v < cells.size(); ++v) {
        for (int l = 0; l < k; ++l) {
            out.push_back({layout.variables[v][static_cast<std::size_t>(l)],
                           ((cells[v] >> (k - 1 - l)) & 1u) != 0});
        }
    }
    return out;
}

// Flips `flag` on every cell accepted by `pred`.
template <class Pred>
std::vector<Gate> cell_oracle(const Layout &layout, int flag, Pred pred) {
    const int n = static_cast<int>(layout.variables.size());
    const int k = static_cast<int>(layout.resolution());
    if (n == 0 || k == 0) {
        throw std::invalid_argument("oracle needs a copula layout");
    }
    std::vector<Gate> out;
    const std::size_t cells = std::size_t{1} << (n * k);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        const auto c = cells_of(flat, n, k);
        if (pred(c)) {
            out.push_back(gates::controlled(cell_controls(layout, c),
                                            {gates::x(flag)}));
        }
    }
    return out;
}

std::vector<Gate> qft(const std::vector<int> &p) {
    const int m = static_cast<int>(p.size());
    std::vector<Gate> out;
    for (int i = 0; i < m; ++i) {
        const int target = p[static_cast<std::size_t>(m - 1 - i)];
        out.push_back(gates::h(target));
        for (int r = 2; r <= m - i; ++r) {
            const int control = p[static_cast<std::size_t>(m - i - r)];
            const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, r);
            out.push_back(gates::controlled({{control, true}},
                                            {gates::phase(target, angle)}));
        }
    }
    for (int s = 0; s < m / 2; ++s) {
        out.push_back(gates::swap(p[static_cast<std::size_t>(s)],
                                  p[static_cast<std::size_t>(m - 1 - s)]));
    }
    return out;
}

// -1 on the |0> state of `q` when every qubit in `others` reads 0.
std::vector<Gate> zero_reflection(int q, const std::vector<int> &others) {
    std::vector<Gate> flip{gates::x(q), gates::phase(q, std::numbers::pi),
                           gates::x(q)};
    std::vector<Control> controls;
    for (int o : others) {
        controls.push_back({o, false});
    }
    return qsim::controlled_fragment(controls, std::move(flip));
}

} // namespace

LossModel LossModel::reference_instance() { return LossModel{{16, 4}, 2}; }

void LossModel::validate() const {
    if (k < 1 || coefficients.empty()) {
        throw std::invalid_argument("loss model needs k >= 1 and coefficients");
    }
    const std::int64_t scale = std::int64_t{1} << k;
    for (auto c : coefficients) {
        if (c < 0 || c % scale != 0) {
            throw std::invalid_argument(
                "loss coefficients must be nonnegative multiples of 2^k");
        }
    }
}

std::int64_t LossModel::loss(std::span<const std::size_t> cells) const {
    if (cells.size() != coefficients.size()) {
        throw std::invalid_argument("cell tuple does not match loss model");
    }
    std::int64_t total = 0;
    for (std::size_t v = 0; v < cells.size(); ++v) {
        total += (coefficients[v] >> k) * static_cast<std::int64_t>(cells[v]);
    }
    return total;
}

std::int64_t LossModel::max_loss() const {
    std::int64_t total = 0;
    for (auto c : coefficients) {
        total += (c >> k) * ((std::int64_t{1} << k) - 1);
    }
    return total;
}

void AEConfig::validate() const {
    if (m < 1 || m > 16) {
        throw std::invalid_argument("estimation qubits m must lie in [1, 16]");
    }
    if (shots && *shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
}

std::vector<double> AEConfig::grid() const {
    validate();
    const std::size_t half = std::size_t{1} << (m - 1);
    std::vector<double> g(half + 1);
    for (std::size_t y = 0; y <= half; ++y) {
        const double s = std::sin(std::numbers::pi * static_cast<double>(y) /
                                  std::ldexp(1.0, m));
        g[y] = s * s;
    }
    g.front() = 0.0;
    g.back() = 1.0;
    if (m >= 2) {
        g[half / 2] = 0.5;
    }
    return g;
}

double AEConfig::step_around(double a) const {
    const auto g = grid();
    const auto it = std::lower_bound(g.begin(), g.end(), a);
    if (it == g.end()) {
        return g.back() - g[g.size() - 2];
    }
    const auto i = static_cast<std::size_t>(it - g.begin());
    const double below = i > 0 ? g[i] - g[i - 1] : 0.0;
    if (*it != a) {
        return below;
    }
    const double above = i + 1 < g.size() ? g[i + 1] - g[i] : 0.0;
    return std::max(below, above);
}

std::vector<Gate> build_comparator(const LossModel &model, std::int64_t v,
                                   const Layout &layout, int flag) {
    model.validate();
    if (v < 0 || v > model.max_loss()) {
        throw std::out_of_range("threshold " + std::to_string(v) +
                                " outside the loss support [0, " +
                                std::to_string(model.max_loss()) + "]");
    }
    if (layout.variables.size() != model.coefficients.size() ||
        static_cast<int>(layout.resolution()) != model.k) {
        throw std::invalid_argument("loss model does not match the layout");
    }
    return cell_oracle(layout, flag, [&](const std::vector<std::size_t> &c) {
        return model.loss(c) <= v;
    });
}

std::vector<Gate> build_event_oracle(std::size_t q_index, const Layout &layout,
                                     int flag, int i, int j) {
    const auto n = static_cast<int>(layout.variables.size());
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
        throw std::invalid_argument("event oracle needs two distinct variables");
    }
    if (q_index >= (std::size_t{1} << layout.resolution())) {
        throw std::out_of_range("quantile index outside the grid");
    }
    // Only variables i and j are constrained: sum out the others by
    // controlling on their qubits alone.
    Layout pair;
    pair.variables = {layout.variables[static_cast<std::size_t>(i)],
                      layout.variables[static_cast<std::size_t>(j)]};
    return cell_oracle(pair, flag, [&](const std::vector<std::size_t> &c) {
        return c[0] >= q_index && c[1] >= q_index;
    });
}

Circuit flagged(const Circuit &copula, const std::vector<Gate> &oracle) {
    Layout layout = copula.layout();
    const int flag = copula.num_qubits();
    layout.controls.push_back(flag);
    Circuit out(flag + 1, layout);
    out.append(copula.gates());
    out.append(oracle);
    return out;
}

AEResult amplitude_estimate(const Circuit &prep, int flag,
                            const AEConfig &config) {
    config.validate();
    const int work = prep.num_qubits();
    const int m = config.m;
    const int total = work + m;
    if (total > kMaxEstimationQubits) {
        throw BudgetExceeded("amplitude estimation needs " +
                             std::to_string(total) + " qubits, limit is " +
                             std::to_string(kMaxEstimationQubits));
    }
    if (flag < 0 || flag >= work) {
        throw std::out_of_range("flag qubit outside the preparation register");
    }

    std::vector<Gate> grover;
    // -S_flag: phase -1 on flag = 0
    grover.push_back(gates::x(flag));
    grover.push_back(gates::phase(flag, std::numbers::pi));
    grover.push_back(gates::x(flag));
    for (const auto &g : qsim::inverse(prep.gates())) {
        grover.push_back(g);
    }
    std::vector<int> others;
    for (int q = 1; q < work; ++q) {
        others.push_back(q);
    }
    for (const auto &g : zero_reflection(0, others)) {
        grover.push_back(g);
    }
    for (const auto &g : prep.gates()) {
        grover.push_back(g);
    }

    std::vector<int> phase_qubits;
    for (int j = 0; j < m; ++j) {
        phase_qubits.push_back(work + j);
    }
    Circuit qpe(total);
    qpe.append(prep.gates());
    for (int q : phase_qubits) {
        qpe.append(gates::h(q));
    }
    std::vector<Gate> power;
    for (int j = 0; j < m; ++j) {
        const std::size_t reps = std::size_t{1} << j;
        power.clear();
        power.reserve(reps * grover.size());
        for (std::size_t r = 0; r < reps; ++r) {
            power.insert(power.end(), grover.begin(), grover.end());
        }
        qpe.append(gates::controlled({{phase_qubits[static_cast<std::size_t>(j)], true}},
                                     power));
    }
    qpe.append(qsim::inverse(qft(phase_qubits)));

    const auto state = qsim::run(qpe);
    const auto dist = qsim::distribution(state, phase_qubits);
    const std::uint64_t full = std::uint64_t{1} << m;
    const std::uint64_t half = full / 2;
    auto fold = [&](std::uint64_t y) { return y <= half ? y : full - y; };

    AEResult result;
    result.qubits = total;
    result.folded.assign(half + 1, 0.0);
    for (std::uint64_t y = 0; y < full; ++y) {
        result.folded[fold(y)] += dist.probabilities[y];
    }
    std::vector<double> votes = result.folded;
    if (config.shots) {
        std::fill(votes.begin(), votes.end(), 0.0);
        for (const auto &[y, count] : qsim::sample(dist, *config.shots, config.seed)) {
            votes[fold(y)] += static_cast<double>(count);
        }
    }
    result.y = static_cast<std::uint64_t>(
        std::max_element(votes.begin(), votes.end()) - votes.begin());
    result.estimate = config.grid()[result.y];
    return result;
}

std::vector<double> true_cdf(const LossModel &model,
                             const copula::CopulaGrid &grid) {
    model.validate();
    const int n = grid.dimension();
    const int k = grid.resolution();
    if (static_cast<std::size_t>(n) != model.coefficients.size() || k != model.k) {
        throw std::invalid_argument("loss model does not match the grid");
    }
    std::vector<double> cdf(static_cast<std::size_t>(model.max_loss()) + 1, 0.0);
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
        cdf[static_cast<std::size_t>(model.loss(cells_of(flat, n, k)))] += grid[flat];
    }
    for (std::size_t v = 1; v < cdf.size(); ++v) {
        cdf[v] += cdf[v - 1];
    }
    return cdf;
}

AEResult estimate_cdf(const LossModel &model, const Circuit &copula,
                      std::int64_t v, const AEConfig &config) {
    const int flag = copula.num_qubits();
    const auto prep = flagged(
        copula, build_comparator(model, v, copula.layout(), flag));
    return amplitude_estimate(prep, flag, config);
}

VarResult estimate_var(const LossModel &model, const Circuit &copula,
                       double level, const AEConfig &config) {
    if (!(level > 0.0 && level < 1.0)) {
        throw std::invalid_argument("VaR level must lie in (0, 1)");
    }
    model.validate();
    VarResult result;
    std::int64_t lo = 0;
    std::int64_t hi = model.max_loss();
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        const double est = estimate_cdf(model, copula, mid, config).estimate;
        result.probes.emplace_back(mid, est);
        if (est >= level) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    result.v = lo;
    return result;
}

double estimate_cqep(const Circuit &copula, std::size_t q_index,
                     const AEConfig &config) {
    const auto &layout = copula.layout();
    const int flag = copula.num_qubits();
    const auto prep =
        flagged(copula, build_event_oracle(q_index, layout, flag));
    const double joint = amplitude_estimate(prep, flag, config).estimate;
    const double tail = 1.0 - std::ldexp(static_cast<double>(q_index),
                                         -static_cast<int>(layout.resolution()));
    return joint / tail;
}

} // namespace qcopula::riskq
