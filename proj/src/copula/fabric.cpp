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
#include "qcopula/copula/fabric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcopula::copula {

void FabricParams::validate() const {
    if (p.empty() || p.front().empty()) {
        throw std::invalid_argument("fabric parameters must be non-empty");
    }
    for (const auto &row : p) {
        if (row.size() != p.front().size()) {
            throw std::invalid_argument("fabric parameter rows differ in length");
        }
        for (double v : row) {
            if (!(v >= 0.0 && v <= 1.0)) {
                throw std::invalid_argument("fabric parameters must lie in [0, 1]");
            }
        }
    }
}

FabricReference fabric_reference(const FabricParams &params, int k_truncation) {
    params.validate();
    if (k_truncation < 1) {
        throw std::invalid_argument("truncation must keep at least one digit");
    }
    const int levels = std::min(k_truncation, params.levels());
    const auto groups = static_cast<std::size_t>(params.groups());
    const auto &p = params.p;

    FabricReference out;
    if (groups == 2 && params.levels() >= 3) {
        out.rho_printed = {
            (4.0 * (p[0][0] + p[0][1]) - p[0][2]) / 21.0,
            (4.0 * (p[1][0] + p[1][1]) - p[1][2]) / 21.0,
            (16.0 * p[0][0] * p[1][0] + 4.0 * p[0][1] * p[1][1] +
             p[0][2] * p[1][2]) /
                21.0,
        };
    }
    out.rho_hidden.assign(groups, std::vector<double>(groups, 0.0));
    out.tail_product.assign(groups, std::vector<double>(groups, 1.0));
    for (std::size_t i = 0; i < groups; ++i) {
        for (std::size_t j = 0; j < groups; ++j) {
            double rho = 0.0;
            double tail = 1.0;
            for (int l = 1; l <= levels; ++l) {
                const auto d = static_cast<std::size_t>(l - 1);
                const double pp = p[i][d] * p[j][d];
                rho += 3.0 / std::ldexp(1.0, 2 * l + 2) * pp;
                tail *= pp;
            }
            out.rho_hidden[i][j] = rho;
            out.tail_product[i][j] = tail;
        }
    }
    return out;
}

CopulaGrid fabric_grid(const FabricParams &params) {
    params.validate();
    const int groups = params.groups();
    const int k = params.levels();
    if (groups < 1) {
        throw std::invalid_argument("fabric copula needs at least one group");
    }
    const int n = groups + 1;
    CopulaGrid grid(n, k);
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
        double p = 1.0;
        for (int l = 0; l < k; ++l) {
            const int shift = k - 1 - l;
            const auto lead = (grid.cell_of(flat, 0) >> shift) & 1u;
            p *= 0.5;
            for (int j = 0; j < groups; ++j) {
                const auto digit = (grid.cell_of(flat, j + 1) >> shift) & 1u;
                const double c = params.p[static_cast<std::size_t>(j)]
                                         [static_cast<std::size_t>(l)];
                p *= digit == lead ? (1.0 + c) / 2.0 : (1.0 - c) / 2.0;
            }
        }
        grid[flat] = p;
    }
    return grid;
}

} // namespace qcopula::copula
