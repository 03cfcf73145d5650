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

#include "qcopula/copula/grid.hpp"

namespace qcopula::copula {

/// Conditional quantile exceedance probability of the B11 copula,
/// 1 - p (1 - alpha).
double cqep_b11(double p, double alpha);

/// P(X_i >= q and X_j >= q) / P(X_j >= q) with q = q_index / 2^k, summed
/// exactly over grid cells.
double grid_cqep(const CopulaGrid &grid, int i, int j, std::size_t q_index);

/// P(X_1 >= q and X_2 >= q | X_3 >= q) over the first three variables.
double grid_cqep3(const CopulaGrid &grid, std::size_t q_index);

/// Spearman's rho on the grid: Pearson correlation of the mid-rank grades
/// G(c) = F(c - 1) + p(c) / 2 of the two variables. A comonotone grid gives
/// exactly 1 and a B11 grid exactly alpha at every resolution.
double grid_spearman(const CopulaGrid &grid, int i, int j);

} // namespace qcopula::copula
