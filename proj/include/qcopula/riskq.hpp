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
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcopula/copula/grid.hpp"
#include "qcopula/qsim/circuit.hpp"

namespace qcopula::riskq {

using qsim::Circuit;
using qsim::Gate;
using qsim::Layout;

/// Largest work + phase register amplitude estimation will simulate.
inline constexpr int kMaxEstimationQubits = 24;

/// Linear loss on the copula variates x_v = c_v / 2^k:
/// Loss = sum_v coefficients[v] x_v, integral on every grid cell.
struct LossModel {
    std::vector<std::int64_t> coefficients;
    int k = 0;

    /// Loss = 16 x1 + 4 x2 on a two-digit grid, i.e. the bits of the two
    /// cells read as one four-bit integer.
    static LossModel reference_instance();

    /// Throws std::invalid_argument unless coefficients are nonnegative and
    /// divisible by 2^k.
    void validate() const;
    std::int64_t loss(std::span<const std::size_t> cells) const;
    std::int64_t max_loss() const;
};

/// Phase-register size and readout mode. Without `shots` the modal outcome
/// of the exact phase distribution is used; with `shots`, the mode of a
/// seeded sample.
struct AEConfig {
    int m = 7;
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;

    void validate() const;
    /// sin^2(pi y / 2^m) for y = 0..2^(m-1), ascending.
    std::vector<double> grid() const;
    /// Width of the grid interval containing `a` (zero-width on grid points
    /// returns the wider neighbouring interval).
    double step_around(double a) const;
};

struct AEResult {
    double estimate = 0.0;
    /// Folded outcome min(y, 2^m - y).
    std::uint64_t y = 0;
    /// Probability of each folded outcome 0..2^(m-1).
    std::vector<double> folded;
    int qubits = 0;
};

/// Flips `flag` on every cell whose loss is at most `v`. Throws
/// std::out_of_range for v outside [0, max_loss].
std::vector<Gate> build_comparator(const LossModel &model, std::int64_t v,
                                   const Layout &layout, int flag);

/// Flips `flag` when variables i and j both sit in cells >= q_index.
std::vector<Gate> build_event_oracle(std::size_t q_index, const Layout &layout,
                                     int flag, int i = 0, int j = 1);

/// `copula` widened by one flag qubit (appended to the layout's controls)
/// followed by `oracle`, which must target qubit copula.num_qubits().
Circuit flagged(const Circuit &copula, const std::vector<Gate> &oracle);

/// Canonical amplitude estimation of P(flag = 1) after `prep`: phase
/// estimation of the Grover operator -A S_0 A^dagger S_flag on m phase
/// qubits. Throws BudgetExceeded past kMaxEstimationQubits.
AEResult amplitude_estimate(const Circuit &prep, int flag,
                            const AEConfig &config);

/// Exact P(Loss <= v) for v = 0..max_loss.
std::vector<double> true_cdf(const LossModel &model,
                             const copula::CopulaGrid &grid);

AEResult estimate_cdf(const LossModel &model, const Circuit &copula,
                      std::int64_t v, const AEConfig &config);

struct VarResult {
    std::int64_t v = 0;
    /// (threshold, estimated cdf) in probe order.
    std::vector<std::pair<std::int64_t, double>> probes;
};

/// Smallest v with estimated P(Loss <= v) >= level, by integer bisection.
VarResult estimate_var(const LossModel &model, const Circuit &copula,
                       double level, const AEConfig &config);

/// Estimated P(X_1 >= q, X_2 >= q) divided by P(X_2 >= q) = 1 - q.
double estimate_cqep(const Circuit &copula, std::size_t q_index,
                     const AEConfig &config);

} // namespace qcopula::riskq
