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

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <random>
#include <set>

#include "qcopula/circuits.hpp"
#include "qcopula/copula/analysis.hpp"
#include "qcopula/copula/archimedean.hpp"
#include "qcopula/copula/fabric.hpp"
#include "qcopula/copula/grid.hpp"
#include "qcopula/copula/mb11.hpp"
#include "qcopula/copula/partition.hpp"
#include "qcopula/copula/rational.hpp"
#include "qcopula/error.hpp"

using namespace qcopula;
using namespace qcopula::copula;
using doctest::Approx;

namespace {

Rational R(long long p, long long q = 1) { return Rational(p, q); }

CopulaGrid b11_grid(double alpha, int k) { return mixture_grid(b11_spec(alpha), k); }

} // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("7/16") == R(7, 16));
    CHECK(parse_rational("3") == R(3));
    CHECK(parse_rational("0.25") == R(1, 4));
    CHECK(parse_rational("-1/2") == R(-1, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK(to_string(R(6, 8)) == "3/4");
}

TEST_CASE("set partitions") {
    const auto p3 = set_partitions(3, false);
    REQUIRE(p3.size() == 5);
    CHECK(p3[0].to_string() == "{{1,2,3}}");
    CHECK(p3[1].to_string() == "{{1,2},{3}}");
    CHECK(p3[2].to_string() == "{{1,3},{2}}");
    CHECK(p3[3].to_string() == "{{1},{2,3}}");
    CHECK(p3[4].to_string() == "{{1},{2},{3}}");
    CHECK(set_partitions(1, false).size() == 1);
    CHECK(set_partitions(3, true).size() == 11);

    const std::uint64_t bell[] = {2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    for (int n = 2; n <= 10; ++n) {
        CHECK(set_partitions(n, false).size() == bell[n - 2]);
        CHECK(bell_number(n) == bell[n - 2]);
    }
    const auto signed4 = set_partitions(4, true);
    CHECK(std::set<SetPartition>(signed4.begin(), signed4.end()).size() == signed4.size());
    CHECK_THROWS_AS(set_partitions(13, false), std::out_of_range);
    CHECK_THROWS_AS(set_partitions(9, true), std::out_of_range);
    CHECK_THROWS_AS(set_partitions(0, false), std::out_of_range);
}

TEST_CASE("partition parsing and normalization") {
    const auto p = SetPartition::parse("{{-1,2},{3}}");
    CHECK(p.to_string() == "{{1,-2},{3}}");
    CHECK(p.is_signed());
    CHECK_FALSE(p.comonotone(0, 1));
    CHECK(SetPartition::parse("{{3},{2,1}}") == SetPartition::parse("{{1,2},{3}}"));
    CHECK_THROWS(SetPartition::parse("{{1,2},{2}}"));
    CHECK_THROWS(SetPartition::parse("{{1},{3}}"));
}

TEST_CASE("canonical grids") {
    const auto m2 = canonical_grid(SetPartition::comonotone(2), 1);
    CHECK(m2.at({0, 0}) == 0.5);
    CHECK(m2.at({1, 1}) == 0.5);
    CHECK(m2.at({0, 1}) == 0.0);

    const int k = 2;
    const auto c112 = canonical_grid(SetPartition::parse("{{1,2},{3}}"), k);
    for (std::size_t f = 0; f < c112.size(); ++f) {
        const bool support = c112.cell_of(f, 0) == c112.cell_of(f, 1);
        CHECK(c112[f] == (support ? 1.0 / 16 : 0.0));
    }

    const auto w2 = canonical_grid(SetPartition::parse("{{1,-2}}"), 2);
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            CHECK(w2.at({a, b}) == (b == 3 - a ? 0.25 : 0.0));
        }
    }
    CHECK(w2.max_margin_deviation() == 0.0);
    CHECK_THROWS_AS(CopulaGrid(5, 5), BudgetExceeded);
}

TEST_CASE("mixture grids") {
    const auto b = b11_grid(1.0 / 3, 1);
    CHECK(b.at({0, 0}) == Approx(1.0 / 3).epsilon(1e-15));
    CHECK(b.at({0, 1}) == Approx(1.0 / 6).epsilon(1e-15));

    const auto b2 = b11_grid(0.5, 2);
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(std::abs(b2.at({a, c}) - (a == c ? 0.15625 : 0.03125)) < 1e-15);
        }
    }

    Mb11Spec half{3, {{SetPartition::comonotone(3), 0.5},
                      {SetPartition::parse("{{1,2},{3}}"), 0.5}}};
    const auto g = mixture_grid(half, 3);
    for (std::size_t f = 0; f < g.size(); ++f) {
        if (g[f] > 0) {
            CHECK(g.cell_of(f, 0) == g.cell_of(f, 1));
        }
    }
    CHECK(g.max_margin_deviation() < 1e-12);

    // linearity
    const auto a = canonical_grid(SetPartition::comonotone(2), 3);
    const auto pi = canonical_grid(SetPartition::independence(2), 3);
    auto lin = a;
    lin *= 0.3;
    auto rest = pi;
    rest *= 0.7;
    lin += rest;
    CHECK(max_abs_difference(lin, b11_grid(0.3, 3)) < 1e-15);

    Mb11Spec bad{2, {{SetPartition::comonotone(2), 0.7}}};
    CHECK_THROWS(mixture_grid(bad, 1));
}

TEST_CASE("calibration from tail dependence") {
    const auto spec = mb11_weights_from_taildep(R(1, 2), R(1, 4), R(1, 8), R(1, 16));
    const Rational expect[] = {R(1, 16), R(7, 16), R(3, 16), R(1, 16), R(1, 4)};
    for (int i = 0; i < 5; ++i) {
        CHECK(spec.entries[static_cast<std::size_t>(i)].second == expect[i]);
    }
    const auto back = taildep_from_weights(spec);
    CHECK(back.lambda2[0][1] == R(1, 2));
    CHECK(back.lambda2[0][2] == R(1, 4));
    CHECK(back.lambda2[1][2] == R(1, 8));
    CHECK(*back.lambda123 == R(1, 16));

    const auto zero = mb11_weights_from_taildep(R(0), R(0), R(0), R(0));
    CHECK(zero.entries.back().second == R(1));
    CHECK_THROWS_AS(mb11_weights_from_taildep(R(1, 2), R(1, 2), R(1, 8), R(1, 4)),
                    InfeasibleStructure);
}

TEST_CASE("tail dependence of mixtures") {
    ExactMb11Spec half{3, {{SetPartition::comonotone(3), R(1, 2)},
                           {SetPartition::parse("{{1,2},{3}}"), R(1, 2)}}};
    const auto t = taildep_from_weights(half);
    CHECK(t.lambda2[0][1] == R(1));
    CHECK(t.lambda2[0][2] == R(1, 2));
    CHECK(t.lambda2[1][2] == R(1, 2));
    CHECK(*t.lambda123 == R(1, 2));

    ExactMb11Spec indep{3, {{SetPartition::independence(3), R(1)}}};
    const auto z = taildep_from_weights(indep);
    CHECK(z.lambda2[0][1] == R(0));
    CHECK(z.lambda2[1][2] == R(0));
}

TEST_CASE("bivariate structure construction") {
    auto bench = [](Rational c) {
        ExactTailDependence t;
        t.lambda2.assign(4, std::vector<Rational>(4, R(0)));
        for (int i = 0; i < 4; ++i) {
            t.lambda2[i][i] = R(1);
        }
        for (int i = 0; i < 3; ++i) {
            t.lambda2[3][i] = t.lambda2[i][3] = c;
        }
        return t;
    };
    const auto spec = mb11_from_bivariate_structure(bench(R(1, 3)));
    CHECK(spec.weight(SetPartition::parse("{{1,4},{2},{3}}")) == R(1, 3));
    CHECK(spec.weight(SetPartition::parse("{{1},{2,4},{3}}")) == R(1, 3));
    CHECK(spec.weight(SetPartition::parse("{{1},{2},{3,4}}")) == R(1, 3));
    CHECK(spec.weight(SetPartition::independence(4)) == R(0));
    const auto round = taildep_from_weights(spec);
    CHECK(round.lambda2 == bench(R(1, 3)).lambda2);

    CHECK(mb11_from_bivariate_structure(bench(R(0))).weight(SetPartition::independence(4)) ==
          R(1));
    CHECK_THROWS_AS(mb11_from_bivariate_structure(bench(R(2, 5))), InfeasibleStructure);
}

TEST_CASE("discretize_cdf") {
    const auto pi = discretize_cdf(independence_cdf, 3);
    CHECK(max_abs_difference(pi, canonical_grid(SetPartition::independence(2), 3)) < 1e-15);
    const auto m = discretize_cdf(comonotone_cdf, 3);
    CHECK(max_abs_difference(m, canonical_grid(SetPartition::comonotone(2), 3)) == 0.0);
    const auto w = discretize_cdf(countermonotone_cdf, 3);
    CHECK(max_abs_difference(w, canonical_grid(SetPartition::parse("{{1,-2}}"), 3)) < 1e-15);

    // a function that is not a copula cdf
    CHECK_THROWS(discretize_cdf([](double u, double v) { return 0.5 * u * v; }, 2));
}

TEST_CASE("archimedean cdfs") {
    const ArchimedeanParams g1{ArchimedeanFamily::Gumbel, 1.0};
    CHECK(archimedean_cdf(g1, 0.3, 0.7) == Approx(0.21).epsilon(1e-14));
    const ArchimedeanParams c2{ArchimedeanFamily::Clayton, 2.0};
    CHECK(archimedean_cdf(c2, 1.0, 0.4) == Approx(0.4).epsilon(1e-14));
    const ArchimedeanParams g2{ArchimedeanFamily::Gumbel, 2.0};
    CHECK(archimedean_cdf(g2, 0.5, 0.5) == Approx(0.3752).epsilon(1e-4));
    CHECK(archimedean_cdf(g2, 0.5, 0.5) ==
          Approx(std::exp(-std::log(2.0) * std::sqrt(2.0))).epsilon(1e-14));
    CHECK_THROWS(archimedean_cdf(g2, 0.0, 0.5));
    CHECK_THROWS(archimedean_cdf(g2, 1.2, 0.5));
    CHECK_THROWS((ArchimedeanParams{ArchimedeanFamily::Gumbel, 0.5}.validate()));
    CHECK_THROWS((ArchimedeanParams{ArchimedeanFamily::Clayton, 0.0}.validate()));
    CHECK(parse_family("clayton") == ArchimedeanFamily::Clayton);
}

TEST_CASE("Gumbel grid agrees with density quadrature") {
    const ArchimedeanParams g2{ArchimedeanFamily::Gumbel, 2.0};
    const int k = 3;
    const auto grid =
        discretize_cdf([&](double u, double v) { return archimedean_cdf(g2, u, v); }, k);
    boost::math::quadrature::tanh_sinh<double> ts;
    const double h = 1.0 / 8;
    double worst = 0.0;
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t b = 0; b < 8; ++b) {
            const double x0 = a * h;
            const double y0 = b * h;
            auto inner = [&](double x) {
                return ts.integrate(
                    [&](double y) {
                        const double d = archimedean_pdf(g2, x, y);
                        return std::isfinite(d) ? d : 0.0;
                    },
                    y0, y0 + h, 1e-10);
            };
            const double mass = ts.integrate(inner, x0, x0 + h, 1e-10);
            worst = std::max(worst, std::abs(mass - grid.at({a, b})));
        }
    }
    CHECK(worst < 1e-6);
    // mass concentrates toward the upper corner
    CHECK(grid.at({7, 7}) > grid.at({3, 4}));
}

TEST_CASE("cqep") {
    CHECK(cqep_b11(0.0, 0.3) == 1.0);
    CHECK(cqep_b11(1.0, 0.3) == Approx(0.3));
    CHECK(cqep_b11(0.5, 0.5) == 0.75);

    for (double alpha : {0.0, 0.25, 0.5, 1.0}) {
        for (int k : {2, 4}) {
            const auto g = b11_grid(alpha, k);
            for (std::size_t q = 0; q < g.levels(); ++q) {
                const double p = static_cast<double>(q) / static_cast<double>(g.levels());
                CHECK(std::abs(grid_cqep(g, 0, 1, q) - cqep_b11(p, alpha)) < 1e-12);
            }
        }
    }

    Mb11Spec half{3, {{SetPartition::comonotone(3), 0.5},
                      {SetPartition::parse("{{1,2},{3}}"), 0.5}}};
    CHECK(grid_cqep3(mixture_grid(half, 3), 0) == Approx(1.0));
    CHECK(std::abs(grid_cqep3(mixture_grid(half, 6), 63) - 0.5) < 0.02);
    const auto c111 = canonical_grid(SetPartition::comonotone(3), 3);
    for (std::size_t q = 0; q < 8; ++q) {
        CHECK(grid_cqep3(c111, q) == Approx(1.0));
    }
}

TEST_CASE("grid spearman") {
    CHECK(std::abs(grid_spearman(canonical_grid(SetPartition::independence(2), 3), 0, 1)) <
          1e-14);
    CHECK(grid_spearman(canonical_grid(SetPartition::comonotone(2), 3), 0, 1) ==
          Approx(1.0).epsilon(1e-14));
    CHECK(grid_spearman(canonical_grid(SetPartition::parse("{{1,-2}}"), 3), 0, 1) ==
          Approx(-1.0).epsilon(1e-14));
    double previous = 0.0;
    for (int k : {2, 4, 6}) {
        const double rho = grid_spearman(b11_grid(0.5, k), 0, 1);
        CHECK(std::abs(rho - 0.5) < 1e-12);
        CHECK(std::abs(rho - 0.5) <= std::abs(previous - 0.5) + 1e-15);
        previous = rho;
    }
}

TEST_CASE("fabric grid and reference formulas") {
    FabricParams zero{{{0, 0, 0}, {0, 0, 0}}};
    FabricParams one{{{1, 1, 1}, {1, 1, 1}}};
    CHECK(fabric_reference(zero, 3).tail_product[0][1] == 0.0);
    CHECK(fabric_reference(one, 3).tail_product[0][1] == 1.0);
    CHECK(max_abs_difference(fabric_grid(zero),
                             canonical_grid(SetPartition::independence(3), 3)) < 1e-15);

    // Brute-force Spearman against the level-weighted closed forms
    // rho(0, j) = sum_l 4^(k-l) p_jl / S and rho(i, j) = sum_l 4^(k-l) p_il p_jl / S
    // with S = (4^k - 1) / 3.
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        FabricParams p{{{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}}};
        const auto grid = circuits::simulate_grid(circuits::build_fabric(p));
        CHECK(max_abs_difference(grid, fabric_grid(p)) < 1e-14);
        const double s = 21.0;
        const double r01 = (16 * p.p[0][0] + 4 * p.p[0][1] + p.p[0][2]) / s;
        const double r02 = (16 * p.p[1][0] + 4 * p.p[1][1] + p.p[1][2]) / s;
        const double r12 = (16 * p.p[0][0] * p.p[1][0] + 4 * p.p[0][1] * p.p[1][1] +
                            p.p[0][2] * p.p[1][2]) / s;
        CHECK(grid_spearman(grid, 0, 1) == Approx(r01).epsilon(1e-12));
        CHECK(grid_spearman(grid, 0, 2) == Approx(r02).epsilon(1e-12));
        CHECK(grid_spearman(grid, 1, 2) == Approx(r12).epsilon(1e-12));
        const auto ref = fabric_reference(p, 3);
        REQUIRE(ref.rho_printed.size() == 3);
        CHECK(ref.rho_printed[2] == Approx(r12).epsilon(1e-12));
    }
}
