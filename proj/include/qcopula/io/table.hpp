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
#include <iosfwd>
#include <string>
#include <vector>

#include "qcopula/copula/grid.hpp"
#include "qcopula/qsim/simulator.hpp"

namespace qcopula::io {

/// RFC 4180: CRLF records, fields quoted when they hold a comma, quote or
/// line break.
void write_csv(std::ostream &out, const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows);
std::vector<std::vector<std::string>> read_csv(std::istream &in);

/// %.17g
std::string format_double(double value);

/// Columns x1..xn (cell numbers) and probability, one row per cell.
void write_grid_csv(std::ostream &out, const copula::CopulaGrid &grid);
/// Inverse of write_grid_csv. Rows may come in any order; missing cells are
/// zero. The resolution is the smallest k fitting the largest cell number.
copula::CopulaGrid read_grid_csv(std::istream &in);

/// Binary PGM (P5), 8-bit, rows top to bottom.
void write_pgm(std::ostream &out, int width, int height,
               const std::vector<std::uint8_t> &pixels);

/// Joint pdf of variables i and j as a 2^k x 2^k image, gray level
/// proportional to probability (255 at the largest cell), variable i along
/// the horizontal axis and variable j growing upwards.
void write_grid_pgm(std::ostream &out, const copula::CopulaGrid &grid,
                    int i = 0, int j = 1);

/// Real part of each entry mapped to gray: 0 most negative, 128 zero, 255
/// most positive (relative to the largest magnitude).
void write_unitary_pgm(std::ostream &out, const qsim::Unitary &u);
/// Columns row, col, re, im for every nonzero entry.
void write_unitary_csv(std::ostream &out, const qsim::Unitary &u);

} // namespace qcopula::io
