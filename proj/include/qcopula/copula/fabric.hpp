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

#include <vector>

#include "qcopula/copula/grid.hpp"

namespace qcopula::copula {

/// Per-gate dependence parameters of the fabric copula: p[j][l] couples
/// variable j + 1 to variable 0 at binary digit l (0 = most significant).
/// At p = 0 the digits are independent, at p = 1 they coincide.
struct FabricParams {
    std::vector<std::vector<double>> p;

    int groups() const { return static_cast<int>(p.size()); }
    int levels() const { return p.empty() ? 0 : static_cast<int>(p.front().size()); }
    /// Throws std::invalid_argument unless rectangular with entries in [0, 1].
    void validate() const;
};

/// Closed-form dependence figures quoted for the fabric copula. They are
/// reference numbers only; brute-force grid statistics are authoritative.
struct FabricReference {
    /// rho12, rho13, rho23 as printed for n = 3 with at least three digits,
    /// where p_ab in the printed rho12 and rho13 is read as (digit a, group b)
    /// and in rho23 as (group a, digit b). Empty otherwise.
    std::vector<double> rho_printed;
    /// Hidden-first-variable correlation between groups i and j, the series
    /// sum_{l=1..K} 3 / 2^(2l + 2) p_il p_jl truncated at K digits.
    std::vector<std::vector<double>> rho_hidden;
    /// prod_{l=1..K} p_il p_jl between groups i and j.
    std::vector<std::vector<double>> tail_product;
};

/// Cell masses of the fabric copula on groups + 1 variables and levels()
/// digits: digits are independent across levels, variable 0's digit is
/// uniform and each group digit agrees with it with probability (1 + p) / 2.
CopulaGrid fabric_grid(const FabricParams &params);

FabricReference fabric_reference(const FabricParams &params, int k_truncation);

} // namespace qcopula::copula
