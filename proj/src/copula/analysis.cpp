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
#include "qcopula/copula/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qcopula::copula {

double cqep_b11(double p, double alpha) {
    if (!(p >= 0.0 && p <= 1.0 && alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("cqep_b11 needs p and alpha in [0, 1]");
    }
    return 1.0 - p * (1.0 - alpha);
}

namespace {
void check_quantile(const CopulaGrid &grid, std::size_t q_index) {
    if (q_index >= grid.levels()) {
        throw std::out_of_range("quantile index must be below 2^k");
    }
}
} // namespace

double grid_cqep(const CopulaGrid &grid, int i, int j, std::size_t q_index) {
    check_quantile(grid, q_index);
    if (i < 0 || j < 0 || i >= grid.dimension() || j >= grid.dimension()) {
        throw std::out_of_range("cqep variable outside grid");
    }
    double joint = 0.0;
    double given = 0.0;
    for (std::size_t f = 0; f < grid.size(); ++f) {
        if (grid.cell_of(f, j) >= q_index) {
            given += grid[f];
            if (grid.cell_of(f, i) >= q_index) {
                joint += grid[f];
            }
        }
    }
    return joint / given;
}

double grid_cqep3(const CopulaGrid &grid, std::size_t q_index) {
    check_quantile(grid, q_index);
    if (grid.dimension() < 3) {
        throw std::invalid_argument("trivariate cqep needs n >= 3");
    }
    double joint = 0.0;
    double given = 0.0;
    for (std::size_t f = 0; f < grid.size(); ++f) {
        if (grid.cell_of(f, 2) >= q_index) {
            given += grid[f];
            if (grid.cell_of(f, 0) >= q_index && grid.cell_of(f, 1) >= q_index) {
                joint += grid[f];
            }
        }
    }
    return joint / given;
}

namespace {
std::vector<double> mid_rank_grades(const std::vector<double> &marginal) {
    std::vector<double> grade(marginal.size());
    double below = 0.0;
    for (std::size_t c = 0; c < marginal.size(); ++c) {
        grade[c] = below + marginal[c] / 2.0;
        below += marginal[c];
    }
    return grade;
}
} // namespace

double grid_spearman(const CopulaGrid &grid, int i, int j) {
    const CopulaGrid pair = grid.bivariate(i, j);
    const auto mi = pair.marginal(0);
    const auto mj = pair.marginal(1);
    const auto gi = mid_rank_grades(mi);
    const auto gj = mid_rank_grades(mj);
    auto moments = [](const std::vector<double> &m, const std::vector<double> &g) {
        double mean = 0.0;
        double second = 0.0;
        for (std::size_t c = 0; c < m.size(); ++c) {
            mean += m[c] * g[c];
            second += m[c] * g[c] * g[c];
        }
        return std::pair{mean, second - mean * mean};
    };
    const auto [mean_i, var_i] = moments(mi, gi);
    const auto [mean_j, var_j] = moments(mj, gj);
    double cov = 0.0;
    const std::size_t levels = pair.levels();
    for (std::size_t a = 0; a < levels; ++a) {
        for (std::size_t b = 0; b < levels; ++b) {
            cov += pair[a * levels + b] * (gi[a] - mean_i) * (gj[b] - mean_j);
        }
    }
    return cov / std::sqrt(var_i * var_j);
}

} // namespace qcopula::copula
