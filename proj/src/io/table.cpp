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
#include "qcopula/io/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace qcopula::io {

namespace {

std::string quote(const std::string &field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

void write_record(std::ostream &out, const std::vector<std::string> &fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out << (i ? "," : "") << quote(fields[i]);
    }
    out << "\r\n";
}

std::uint8_t gray(double x) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(x, 0.0, 1.0) * 255.0));
}

} // namespace

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_csv(std::ostream &out, const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows) {
    write_record(out, header);
    for (const auto &r : rows) {
        write_record(out, r);
    }
}

std::vector<std::vector<std::string>> read_csv(std::istream &in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    char c;
    auto end_record = [&] {
        record.push_back(field);
        field.clear();
        rows.push_back(std::move(record));
        record.clear();
        any = false;
    };
    while (in.get(c)) {
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            record.push_back(field);
            field.clear();
            any = true;
        } else if (c == '\r') {
            continue;
        } else if (c == '\n') {
            end_record();
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted) {
        throw std::invalid_argument("CSV: unterminated quoted field");
    }
    if (any || !field.empty() || !record.empty()) {
        end_record();
    }
    return rows;
}

void write_grid_csv(std::ostream &out, const copula::CopulaGrid &grid) {
    const int n = grid.dimension();
    std::vector<std::string> header;
    for (int v = 0; v < n; ++v) {
        header.push_back("x" + std::to_string(v + 1));
    }
    header.push_back("probability");
    write_record(out, header);
    std::vector<std::string> row(static_cast<std::size_t>(n) + 1);
    for (std::size_t flat = 0; flat < grid.size(); ++flat) {
        for (int v = 0; v < n; ++v) {
            row[static_cast<std::size_t>(v)] = std::to_string(grid.cell_of(flat, v));
        }
        row.back() = format_double(grid[flat]);
        write_record(out, row);
    }
}

copula::CopulaGrid read_grid_csv(std::istream &in) {
    const auto rows = read_csv(in);
    if (rows.size() < 2) {
        throw std::invalid_argument("grid CSV needs a header and rows");
    }
    const auto width = rows.front().size();
    if (width < 3 || rows.front().back() != "probability") {
        throw std::invalid_argument(
            "grid CSV header must be x1..xn,probability with n >= 2");
    }
    const int n = static_cast<int>(width) - 1;
    std::vector<std::pair<std::vector<std::size_t>, double>> cells;
    std::size_t largest = 0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto &row = rows[r];
        if (row.size() == 1 && row[0].empty()) {
            continue;
        }
        if (row.size() != width) {
            throw std::invalid_argument("grid CSV row " + std::to_string(r + 1) +
                                        " has the wrong number of fields");
        }
        std::vector<std::size_t> cell;
        for (int v = 0; v < n; ++v) {
            cell.push_back(std::stoul(row[static_cast<std::size_t>(v)]));
            largest = std::max(largest, cell.back());
        }
        cells.emplace_back(std::move(cell), std::stod(row.back()));
    }
    int k = 1;
    while ((std::size_t{1} << k) <= largest) {
        ++k;
    }
    copula::CopulaGrid grid(n, k);
    for (const auto &[cell, p] : cells) {
        grid[grid.flat_index(cell)] += p;
    }
    return grid;
}

void write_pgm(std::ostream &out, int width, int height,
               const std::vector<std::uint8_t> &pixels) {
    if (width <= 0 || height <= 0 ||
        pixels.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw std::invalid_argument("PGM dimensions do not match the pixel data");
    }
    out << "P5\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char *>(pixels.data()),
              static_cast<std::streamsize>(pixels.size()));
}

void write_grid_pgm(std::ostream &out, const copula::CopulaGrid &grid, int i,
                    int j) {
    const auto pair = grid.bivariate(i, j);
    const auto side = pair.levels();
    double top = 0.0;
    for (double p : pair.cells()) {
        top = std::max(top, p);
    }
    std::vector<std::uint8_t> pixels(side * side);
    for (std::size_t a = 0; a < side; ++a) {
        for (std::size_t b = 0; b < side; ++b) {
            const double p = pair[a * side + b];
            pixels[(side - 1 - b) * side + a] = gray(top > 0 ? p / top : 0.0);
        }
    }
    write_pgm(out, static_cast<int>(side), static_cast<int>(side), pixels);
}

void write_unitary_pgm(std::ostream &out, const qsim::Unitary &u) {
    const auto dim = u.dimension();
    double top = 0.0;
    for (const auto &e : u.entries) {
        top = std::max(top, std::abs(e));
    }
    std::vector<std::uint8_t> pixels(u.entries.size());
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        const double re = top > 0 ? u.entries[i].real() / top : 0.0;
        pixels[i] = static_cast<std::uint8_t>(std::lround(127.5 + 127.5 * re));
    }
    write_pgm(out, static_cast<int>(dim), static_cast<int>(dim), pixels);
}

void write_unitary_csv(std::ostream &out, const qsim::Unitary &u) {
    const auto dim = u.dimension();
    write_record(out, {"row", "col", "re", "im"});
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
            const auto e = u(r, c);
            if (std::abs(e) > 1e-15) {
                write_record(out, {std::to_string(r), std::to_string(c),
                                   format_double(e.real()), format_double(e.imag())});
            }
        }
    }
}

} // namespace qcopula::io
