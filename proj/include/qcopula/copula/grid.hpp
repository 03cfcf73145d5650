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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qcopula/copula/partition.hpp"

namespace qcopula::copula {

/// Largest n * k the grid code will allocate (2^24 cells).
inline constexpr int kMaxGridBits = 24;

/**
 * Discretized copula on the dyadic grid {0, 1, ..., 2^k - 1}^n.
 *
 * Cell (c_0, ..., c_{n-1}) covers the box prod [c_v / 2^k, (c_v + 1) / 2^k).
 * Cells are stored with variable 0 most significant, so the flat index is the
 * concatenation of the variables' k-bit cell numbers.
 */
class CopulaGrid {
  public:
    CopulaGrid() = default;
    /// All-zero grid; throws BudgetExceeded if n * k > kMaxGridBits.
    CopulaGrid(int n, int k);
    CopulaGrid(int n, int k, std::vector<double> cells);

    int dimension() const { return n_; }
    int resolution() const { return k_; }
    std::size_t levels() const { return std::size_t{1} << k_; }
    std::size_t size() const { return cells_.size(); }

    std::span<const double> cells() const { return cells_; }
    std::span<double> cells() { return cells_; }
    double &operator[](std::size_t flat) { return cells_[flat]; }
    double operator[](std::size_t flat) const { return cells_[flat]; }

    std::size_t flat_index(std::span<const std::size_t> cell) const;
    std::size_t cell_of(std::size_t flat, int var) const {
        return (flat >> (k_ * (n_ - 1 - var))) & (levels() - 1);
    }
    double at(std::initializer_list<std::size_t> cell) const;

    double total() const;
    std::vector<double> marginal(int var) const;
    /// Joint distribution of two variables as an n = 2 grid.
    CopulaGrid bivariate(int i, int j) const;

    /// Largest |marginal cell - 2^-k| over all axes.
    double max_margin_deviation() const;
    /// Throws MarginViolation when total or any marginal is off by more than
    /// `tolerance`.
    void check_margins(double tolerance) const;

    CopulaGrid &operator+=(const CopulaGrid &other);
    CopulaGrid &operator*=(double factor);

  private:
    int n_ = 0;
    int k_ = 0;
    std::vector<double> cells_;
};

double max_abs_difference(const CopulaGrid &a, const CopulaGrid &b);

/// Pdf of the canonical copula of `partition`: each block draws one uniform
/// cell seed; '+' members copy it and '-' members take its bitwise complement.
CopulaGrid canonical_grid(const SetPartition &partition, int k);

using Cdf2 = std::function<double(double, double)>;

/// Inclusion-exclusion cell masses of a bivariate copula cdf. The cdf is
/// never evaluated on the lower boundary (taken as 0). Round-off negatives
/// down to -1e-12 are zeroed; anything below throws std::domain_error.
/// Throws MarginViolation when margins are off by more than 1e-9.
CopulaGrid discretize_cdf(const Cdf2 &cdf, int k);

} // namespace qcopula::copula
