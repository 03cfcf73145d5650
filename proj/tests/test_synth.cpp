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
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qcopula/copula/archimedean.hpp"
#include "qcopula/copula/grid.hpp"
#include "qcopula/qsim/simulator.hpp"
#include "qcopula/synth.hpp"

using namespace qcopula;
using namespace qcopula::synth;

namespace {

std::vector<double> realized(const Fragment &f, int width) {
    qsim::Circuit c(width);
    c.append(f);
    const auto d = qsim::distribution(qsim::run(c));
    return d.probabilities;
}

// Outcome index with qubits[0] most significant.
std::vector<double> realized_msb(const Fragment &f, const std::vector<int> &qubits) {
    const auto raw = realized(f, static_cast<int>(qubits.size()));
    std::vector<double> out(raw.size());
    for (std::size_t b = 0; b < raw.size(); ++b) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            idx |= ((b >> qubits[i]) & 1u) << (qubits.size() - 1 - i);
        }
        out[idx] += raw[b];
    }
    return out;
}

double max_err(const std::vector<double> &a, const std::vector<double> &b) {
    double e = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        e = std::max(e, std::abs(a[i] - b[i]));
    }
    return e;
}

} // namespace

TEST_CASE("bernoulli_angle") {
    CHECK(bernoulli_angle(0.0) == 0.0);
    CHECK(bernoulli_angle(1.0) == doctest::Approx(std::numbers::pi));
    CHECK(std::abs(bernoulli_angle(1.0 / 3.0) - 1.23096) < 1e-5);
    CHECK_THROWS(bernoulli_angle(-0.1));
    CHECK_THROWS(bernoulli_angle(1.1));
}

TEST_CASE("synth2 examples") {
    const std::vector<int> qs{0, 1};
    CHECK(max_err(realized_msb(synth2(std::vector<double>{1, 0, 0, 0}, 0, 1), qs),
                  {1, 0, 0, 0}) < 1e-15);
    CHECK(max_err(realized_msb(synth2(std::vector<double>{.25, .25, .25, .25}, 0, 1), qs),
                  {.25, .25, .25, .25}) < 1e-15);
    const std::vector<double> cqg{15.0 / 32, 9.0 / 32, 5.0 / 32, 3.0 / 32};
    CHECK(max_err(realized_msb(synth2(cqg, 0, 1), qs), cqg) < 1e-12);
    CHECK_THROWS(synth2(std::vector<double>{0.5, 0.5, 0.5, 0}, 0, 1));
}

TEST_CASE("synth3_5 examples and support") {
    const std::vector<int> qs{0, 1, 2};
    auto five = [&](std::vector<double> t) {
        auto r = realized_msb(synth3_5(t, 0, 1, 2), qs);
        t.resize(8, 0.0);
        return max_err(r, t);
    };
    CHECK(five({1, 0, 0, 0, 0}) < 1e-15);
    CHECK(five({1.0 / 16, 7.0 / 16, 3.0 / 16, 1.0 / 16, 0.25}) < 1e-12);
    CHECK(five({0, 0, 0, 0, 1}) < 1e-15);
    CHECK_THROWS(synth3_5(std::vector<double>{0.5, 0.5, 0, 0, 0.5}, 0, 1, 2));
}

TEST_CASE("conditional_loader examples") {
    const std::vector<int> qs{0, 1, 2};
    std::vector<double> uniform(8, 0.125);
    const auto f = conditional_loader(uniform, qs);
    CHECK(f.size() == 3); // one rotation per qubit
    CHECK(max_err(realized_msb(f, qs), uniform) < 1e-15);

    const std::vector<int> two{0, 1};
    CHECK(max_err(realized_msb(conditional_loader(std::vector<double>{.5, 0, 0, .5}, two), two),
                  {.5, 0, 0, .5}) < 1e-15);

    // k = 3 Gumbel grid row, renormalized
    const copula::ArchimedeanParams gumbel{copula::ArchimedeanFamily::Gumbel, 2.0};
    const auto grid = copula::discretize_cdf(
        [&](double u, double v) { return copula::archimedean_cdf(gumbel, u, v); }, 3);
    std::vector<double> row(8);
    double sum = 0.0;
    for (std::size_t j = 0; j < 8; ++j) {
        row[j] = grid.at({5, j});
        sum += row[j];
    }
    for (auto &p : row) {
        p /= sum;
    }
    CHECK(max_err(realized_msb(conditional_loader(row, qs), qs), row) < 1e-12);
}

TEST_CASE("tiny entries are clamped") {
    const std::vector<int> two{0, 1};
    const std::vector<double> t{0.5, 1e-17, 0.5 - 1e-17, 0};
    const auto f = conditional_loader(t, two);
    CHECK(max_err(realized_msb(f, two), {0.5, 0, 0.5, 0}) < 1e-15);
}

TEST_CASE("random round trips") {
    std::mt19937_64 rng(7);
    std::exponential_distribution<double> e(1.0);
    std::bernoulli_distribution zero(0.2);
    auto simplex = [&](std::size_t len) {
        std::vector<double> p(len);
        double s = 0.0;
        for (auto &x : p) {
            x = zero(rng) ? 0.0 : e(rng);
            s += x;
        }
        if (s == 0.0) {
            p[0] = s = 1.0;
        }
        for (auto &x : p) {
            x /= s;
        }
        return p;
    };
    const std::vector<int> two{1, 0};
    const std::vector<int> three{2, 0, 1};
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto p4 = simplex(4);
        worst = std::max(worst, max_err(realized_msb(synth2(p4, 1, 0), two), p4));
        auto p5 = simplex(5);
        auto r5 = realized_msb(synth3_5(p5, 2, 0, 1), three);
        p5.resize(8, 0.0);
        worst = std::max(worst, max_err(r5, p5));
        const auto p8 = simplex(8);
        worst = std::max(worst, max_err(realized_msb(conditional_loader(p8, three), three), p8));
    }
    CHECK(worst < 1e-12);
}
