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
#include "qcopula/copula/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qcopula/error.hpp"

namespace qcopula::copula {

CopulaGrid::CopulaGrid(int n, int k) : n_(n), k_(k) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("grid needs n >= 1 and k >= 1");
    }
    if (n * k > kMaxGridBits) {
        throw BudgetExceeded("grid of " + std::to_string(n * k) +
                             " bits exceeds the " +
                             std::to_string(kMaxGridBits) + "-bit budget");
    }
    cells_.assign(std::size_t{1} << (n * k), 0.0);
}

CopulaGrid::CopulaGrid(int n, int k, std::vector<double> cells)
    : CopulaGrid(n, k) {
    if (cells.size() != cells_.size()) {
        throw std::invalid_argument("grid needs 2^(n k) cells");
    }
    cells_ = std::move(cells);
}

std::size_t CopulaGrid::flat_index(std::span<const std::size_t> cell) const {
    if (cell.size() != static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("cell arity does not match grid");
    }
    std::size_t flat = 0;
    for (std::size_t c : cell) {
        if (c >= levels()) {
            throw std::out_of_range("cell index outside grid");
        }
        flat = (flat << k_) | c;
    }
    return flat;
}

double CopulaGrid::at(std::initializer_list<std::size_t> cell) const {
    return cells_[flat_index(std::span(cell.begin(), cell.size()))];
}

double CopulaGrid::total() const {
    double t = 0.0;
    for (double v : cells_) {
        t += v;
    }
    return t;
}

std::vector<double> CopulaGrid::marginal(int var) const {
    if (var < 0 || var >= n_) {
        throw std::out_of_range("marginal variable outside grid");
    }
    std::vector<double> m(levels(), 0.0);
    for (std::size_t f = 0; f < cells_.size(); ++f) {
        m[cell_of(f, var)] += cells_[f];
    }
    return m;
}

CopulaGrid CopulaGrid::bivariate(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) {
        throw std::out_of_range("bivariate margin needs two distinct variables");
    }
    CopulaGrid out(2, k_);
    for (std::size_t f = 0; f < cells_.size(); ++f) {
        out.cells_[(cell_of(f, i) << k_) | cell_of(f, j)] += cells_[f];
    }
    return out;
}

double CopulaGrid::max_margin_deviation() const {
    const double uniform = 1.0 / static_cast<double>(levels());
    double worst = 0.0;
    for (int v = 0; v < n_; ++v) {
        for (double m : marginal(v)) {
            worst = std::max(worst, std::abs(m - uniform));
        }
    }
    return worst;
}

void CopulaGrid::check_margins(double tolerance) const {
    const double t = total();
    if (std::abs(t - 1.0) > tolerance) {
        throw MarginViolation("grid mass " + std::to_string(t) + " is not 1");
    }
    for (double v : cells_) {
        if (v < 0.0) {
            throw MarginViolation("grid has a negative cell");
        }
    }
    const double dev = max_margin_deviation();
    if (dev > tolerance) {
        throw MarginViolation("marginal deviates from uniform by " +
                              std::to_string(dev));
    }
}

CopulaGrid &CopulaGrid::operator+=(const CopulaGrid &other) {
    if (other.n_ != n_ || other.k_ != k_) {
        throw std::invalid_argument("grid shapes differ");
    }
    for (std::size_t f = 0; f < cells_.size(); ++f) {
        cells_[f] += other.cells_[f];
    }
    return *this;
}

CopulaGrid &CopulaGrid::operator*=(double factor) {
    for (double &v : cells_) {
        v *= factor;
    }
    return *this;
}

double max_abs_difference(const CopulaGrid &a, const CopulaGrid &b) {
    if (a.dimension() != b.dimension() || a.resolution() != b.resolution()) {
        throw std::invalid_argument("grid shapes differ");
    }
    double worst = 0.0;
    for (std::size_t f = 0; f < a.size(); ++f) {
        worst = std::max(worst, std::abs(a[f] - b[f]));
    }
    return worst;
}

CopulaGrid canonical_grid(const SetPartition &partition, int k) {
    const int n = partition.size();
    CopulaGrid grid(n, k);
    const int blocks = partition.num_blocks();
    const std::size_t levels = grid.levels();
    const std::size_t seeds = std::size_t{1} << (k * blocks);
    const double mass = 1.0 / static_cast<double>(seeds);
    std::vector<std::size_t> cell(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < seeds; ++s) {
        for (int v = 0; v < n; ++v) {
            const auto b = partition.block_of(v);
            const std::size_t seed = (s >> (k * b)) & (levels - 1);
            cell[static_cast<std::size_t>(v)] =
                partition.negated(v) ? (levels - 1 - seed) : seed;
        }
        grid[grid.flat_index(cell)] += mass;
    }
    return grid;
}

CopulaGrid discretize_cdf(const Cdf2 &cdf, int k) {
    CopulaGrid grid(2, k);
    const std::size_t levels = grid.levels();
    const double step = 1.0 / static_cast<double>(levels);
    // F on the (levels + 1)^2 lattice; row/column 0 is the lower boundary
    std::vector<double> f((levels + 1) * (levels + 1), 0.0);
    auto at = [&](std::size_t i, std::size_t j) -> double & {
        return f[i * (levels + 1) + j];
    };
    for (std::size_t i = 1; i <= levels; ++i) {
        for (std::size_t j = 1; j <= levels; ++j) {
            at(i, j) = cdf(static_cast<double>(i) * step,
                           static_cast<double>(j) * step);
        }
    }
    for (std::size_t i = 0; i < levels; ++i) {
        for (std::size_t j = 0; j < levels; ++j) {
            double mass =
                at(i + 1, j + 1) - at(i, j + 1) - at(i + 1, j) + at(i, j);
            if (mass < 0.0) {
                if (mass < -1e-12) {
                    throw std::domain_error(
                        "cdf yields negative cell mass; not a copula cdf");
                }
                mass = 0.0;
            }
            grid[(i << k) | j] = mass;
        }
    }
    grid.check_margins(1e-9);
    return grid;
}

} // namespace qcopula::copula
