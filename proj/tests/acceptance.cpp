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
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "qcopula/circuits.hpp"
#include "qcopula/copula/analysis.hpp"
#include "qcopula/copula/archimedean.hpp"
#include "qcopula/copula/fabric.hpp"
#include "qcopula/copula/partition.hpp"
#include "qcopula/error.hpp"
#include "qcopula/io/qasm.hpp"
#include "qcopula/riskq.hpp"
#include "qcopula/synth.hpp"

using namespace qcopula;
using namespace qcopula::copula;
using circuits::simulate_grid;
using R = Rational;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string &name, const std::function<Outcome()> &check) {
    Outcome o;
    try {
        o = check();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) {
        ++failures;
    }
    fmt::print("{} {:2d} {}: {}\n", o.pass ? "PASS" : "FAIL", id, name, o.detail);
    std::fflush(stdout);
}

ExactMb11Spec eq15() { return mb11_weights_from_taildep(R(1, 2), R(1, 4), R(1, 8), R(1, 16)); }

ExactMb11Spec half111_112() {
    return {3, {{SetPartition::comonotone(3), R(1, 2)}, {SetPartition::parse("{{1,2},{3}}"), R(1, 2)}}};
}

double state_distance(const qsim::Circuit &a, const qsim::Circuit &b) {
    const auto sa = qsim::run(a);
    const auto sb = qsim::run(b);
    if (sa.dimension() != sb.dimension()) {
        return INFINITY;
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < sa.amplitudes().size(); ++i) {
        worst = std::max(worst, std::abs(sa.amplitudes()[i] - sb.amplitudes()[i]));
    }
    return worst;
}

std::vector<double> realized_msb(const synth::Fragment &f, const std::vector<int> &qubits) {
    qsim::Circuit c(static_cast<int>(qubits.size()));
    c.append(f);
    const auto raw = qsim::distribution(qsim::run(c)).probabilities;
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
        e = std::max(e, std::abs(a[i] - (i < b.size() ? b[i] : 0.0)));
    }
    return e;
}

} // namespace

int main() {
    report(1, "B11 pure k=1 alpha=1/3", [] {
        const auto c = circuits::build_b11_pure(1.0 / 3, 1);
        const auto g = simulate_grid(c);
        const double expect[] = {1.0 / 3, 1.0 / 6, 1.0 / 6, 1.0 / 3};
        double err = 0.0;
        for (std::size_t f = 0; f < 4; ++f) {
            err = std::max(err, std::abs(g[f] - expect[f]));
        }
        double angle = 0.0;
        for (const auto &gate : c.gates()) {
            if (gate.kind == qsim::GateKind::Ry) {
                angle = gate.angle;
            }
        }
        return Outcome{err < 1e-12 && std::abs(angle - 1.23096) < 1e-5,
                       fmt::format("max error {:.3g}, angle {:.15g}", err, angle)};
    });

    report(2, "B11 mixed k=2 alpha=1/2", [] {
        const auto g = simulate_grid(circuits::build_b11_mixed(0.5, 2));
        double err = 0.0;
        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t b = 0; b < 4; ++b) {
                err = std::max(err, std::abs(g.at({a, b}) - (a == b ? 0.15625 : 0.03125)));
            }
        }
        return Outcome{err < 1e-12, fmt::format("max error {:.3g}", err)};
    });

    report(3, "B11 pure general k", [] {
        double err = 0.0;
        for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            for (int k = 1; k <= 4; ++k) {
                err = std::max(err, max_abs_difference(simulate_grid(circuits::build_b11_pure(alpha, k)),
                                                       mixture_grid(b11_spec(alpha), k)));
            }
        }
        const double a2 = circuits::b11_level_alpha(0.5, 2);
        return Outcome{err < 1e-12 && std::abs(a2 - 2.0 / 3) < 1e-15,
                       fmt::format("max error {:.3g}, alpha_2 {:.17g}", err, a2)};
    });

    report(4, "tail dependence calibration", [] {
        const auto spec = eq15();
        const R expect[] = {R(1, 16), R(7, 16), R(3, 16), R(1, 16), R(1, 4)};
        bool ok = spec.entries.size() == 5;
        for (std::size_t i = 0; ok && i < 5; ++i) {
            ok = spec.entries[i].second == expect[i];
        }
        const auto back = taildep_from_weights(spec);
        ok = ok && back.lambda2[0][1] == R(1, 2) && back.lambda2[0][2] == R(1, 4) &&
             back.lambda2[1][2] == R(1, 8) && back.lambda123 && *back.lambda123 == R(1, 16);
        std::string w;
        for (const auto &[p, x] : spec.entries) {
            w += to_string(x) + " ";
        }
        return Outcome{ok, "weights " + w + "round trip exact"};
    });

    report(5, "MB11 pure trivariate", [] {
        const auto exact = eq15();
        const auto cqg = circuits::cqg_probabilities(exact);
        bool ok = cqg[0] == R(15, 64) && cqg[1] == R(9, 64) && cqg[2] == R(5, 64) && cqg[3] == R(3, 64);
        using V = std::vector<R>;
        const V expect[4] = {
            {R(2, 15), R(7, 15), R(1, 5), R(1, 15), R(2, 15)},
            {R(0), R(7, 9), R(0), R(0), R(2, 9)},
            {R(0), R(0), R(3, 5), R(0), R(2, 5)},
            {R(0), R(0), R(0), R(1, 3), R(2, 3)},
        };
        for (int r = 0; r < 4; ++r) {
            const int ctx[] = {r};
            ok = ok && circuits::pure3_child_weights(exact, ctx) == expect[r];
        }
        double err = 0.0;
        int qubits4 = 0;
        bool no_ancilla = true;
        for (int k : {2, 4}) {
            const auto c = circuits::build_mb11_pure3(to_double(exact), k);
            err = std::max(err, max_abs_difference(simulate_grid(c), mixture_grid(exact, k)));
            no_ancilla = no_ancilla && c.num_qubits() == 3 * k && c.layout().controls.empty();
            if (k == 4) {
                qubits4 = c.num_qubits();
            }
        }
        const int mixed4 = circuits::build_mb11_mixed(to_double(exact), 4).num_qubits();
        return Outcome{ok && err < 1e-10 && no_ancilla,
                       fmt::format("exact weights {}, max error {:.3g}, qubits at k=4 {} (mixed {})",
                                   ok ? "match" : "differ", err, qubits4, mixed4)};
    });

    report(6, "MB11 mixed half C111 + half C112", [] {
        const auto exact = half111_112();
        const auto c = circuits::build_mb11_mixed(to_double(exact), 3);
        const auto t = taildep_from_weights(exact);
        const std::vector<std::vector<R>> lambda = {
            {R(1), R(1), R(1, 2)}, {R(1), R(1), R(1, 2)}, {R(1, 2), R(1, 2), R(1)}};
        const auto g = simulate_grid(c);
        bool support = true;
        for (std::size_t f = 0; f < g.size(); ++f) {
            if (g[f] > 1e-15 && g.cell_of(f, 0) != g.cell_of(f, 1)) {
                support = false;
            }
        }
        const double err = max_abs_difference(g, mixture_grid(exact, 3));
        return Outcome{c.num_qubits() == 10 && t.lambda2 == lambda && support && err < 1e-12,
                       fmt::format("{} qubits, max error {:.3g}, support on x=y {}", c.num_qubits(), err,
                                   support)};
    });

    report(7, "four-variable benchmark", [] {
        const auto c = circuits::build_benchmark4(2);
        const auto ctrl = qsim::distribution(qsim::run(c), c.layout().controls).probabilities;
        // outcome bit 0 is c1; components are (c1, c2) = (0,0), (0,1), (1,0)
        const double target[] = {1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0};
        const double got[] = {ctrl[0], ctrl[2], ctrl[1], ctrl[3]};
        double cerr = 0.0;
        for (int i = 0; i < 4; ++i) {
            cerr = std::max(cerr, std::abs(got[i] - target[i]));
        }
        const double err = max_abs_difference(simulate_grid(c), mixture_grid(circuits::benchmark4_spec(), 2));
        bool infeasible = false;
        ExactTailDependence t;
        t.lambda2.assign(4, std::vector<R>(4, R(0)));
        for (int i = 0; i < 4; ++i) {
            t.lambda2[i][i] = R(1);
        }
        for (int i = 0; i < 3; ++i) {
            t.lambda2[3][i] = t.lambda2[i][3] = R(2, 5);
        }
        try {
            (void)mb11_from_bivariate_structure(t);
        } catch (const InfeasibleStructure &) {
            infeasible = true;
        }
        return Outcome{cerr < 1e-14 && err < 1e-12 && infeasible,
                       fmt::format("control error {:.3g}, grid error {:.3g}, 0.4 infeasible {}", cerr, err,
                                   infeasible)};
    });

    report(8, "generic builder", [] {
        double err = 0.0;
        double margin = 0.0;
        bool count = circuits::generic_synthesizer_count(2, 3) == 21;
        for (auto fam : {ArchimedeanFamily::Gumbel, ArchimedeanFamily::Clayton}) {
            const ArchimedeanParams p{fam, 2.0};
            const auto grid = discretize_cdf([&](double a, double b) { return archimedean_cdf(p, a, b); }, 3);
            const auto built = circuits::build_generic(grid);
            const auto realized = simulate_grid(built.circuit);
            err = std::max(err, max_abs_difference(realized, grid));
            margin = std::max(margin, realized.max_margin_deviation());
            count = count && built.synthesizers == 21;
        }
        return Outcome{err < 1e-10 && margin < 1e-9 && count,
                       fmt::format("max error {:.3g}, margin deviation {:.3g}, 21 synthesizers {}", err, margin,
                                   count)};
    });

    report(9, "Frechet trivariate", [] {
        const std::vector<Mb11Spec> specs = {
            {3, {{SetPartition::parse("{{1,-2},{3}}"), 1.0}}},
            {3, {{SetPartition::parse("{{1,2,-3}}"), 0.5}, {SetPartition::independence(3), 0.5}}},
            {3,
             {{SetPartition::parse("{{1,-3},{2}}"), 0.3},
              {SetPartition::comonotone(3), 0.2},
              {SetPartition::parse("{{1},{2,-3}}"), 0.1},
              {SetPartition::independence(3), 0.4}}},
        };
        double err = 0.0;
        for (const auto &s : specs) {
            err = std::max(err, max_abs_difference(simulate_grid(circuits::build_frechet3_pure(s, 2)),
                                                   mixture_grid(s, 2)));
        }
        return Outcome{err < 1e-10, fmt::format("max error {:.3g}", err)};
    });

    report(10, "cqep exact on B11 grids", [] {
        double err = 0.0;
        for (double alpha : {0.0, 0.5, 1.0}) {
            for (int k : {2, 4}) {
                const auto g = mixture_grid(b11_spec(alpha), k);
                for (std::size_t q = 0; q < (std::size_t{1} << k); ++q) {
                    const double qq = std::ldexp(static_cast<double>(q), -k);
                    err = std::max(err, std::abs(grid_cqep(g, 0, 1, q) - (1 - qq * (1 - alpha))));
                }
            }
        }
        return Outcome{err < 1e-12, fmt::format("max error {:.3g}", err)};
    });

    report(11, "tail limits", [] {
        std::vector<double> tops;
        for (int k : {2, 4, 6}) {
            const auto g = mixture_grid(b11_spec(0.5), k);
            tops.push_back(grid_cqep(g, 0, 1, (std::size_t{1} << k) - 1));
        }
        const bool monotone = tops[0] > tops[1] && tops[1] > tops[2] && tops[2] > 0.5;
        const double tri = grid_cqep3(mixture_grid(half111_112(), 6), 63);
        return Outcome{monotone && std::abs(tri - 0.5) < 0.02,
                       fmt::format("bivariate {:.6f} {:.6f} {:.6f}, trivariate k=6 {:.6f}", tops[0], tops[1],
                                   tops[2], tri)};
    });

    report(12, "VaR pipeline", [] {
        const auto model = riskq::LossModel::reference_instance();
        const auto copula = circuits::build_b11_pure(0.5, 2);
        const auto truth = riskq::true_cdf(model, simulate_grid(copula));
        riskq::AEConfig cfg;
        double worst = 0.0;
        bool within = true;
        for (std::int64_t v = 0; v <= model.max_loss(); ++v) {
            const auto t = truth[static_cast<std::size_t>(v)];
            const double e = riskq::estimate_cdf(model, copula, v, cfg).estimate;
            within = within && std::abs(e - t) <= cfg.step_around(t);
            worst = std::max(worst, std::abs(e - t));
        }
        const auto var = riskq::estimate_var(model, copula, 0.25, cfg);
        qsim::Circuit half(1);
        half.append(qsim::gates::ry(0, synth::bernoulli_angle(0.5)));
        const double exact = riskq::amplitude_estimate(half, 0, cfg).estimate;
        return Outcome{within && var.v == 4 && exact == 0.5,
                       fmt::format("max CDF error {:.4f}, VaR(0.25) = {}, a=0.5 estimated as {}", worst, var.v,
                                   exact)};
    });

    report(13, "cqep estimation", [] {
        const auto copula = circuits::build_b11_pure(0.5, 2);
        const auto g = simulate_grid(copula);
        riskq::AEConfig cfg;
        bool ok = true;
        std::string detail;
        for (std::size_t q = 0; q < 4; ++q) {
            const double truth = grid_cqep(g, 0, 1, q);
            const double tail = 1.0 - q / 4.0;
            const double est = riskq::estimate_cqep(copula, q, cfg);
            const double tol = cfg.step_around(truth * tail) / tail;
            ok = ok && std::abs(est - truth) <= tol;
            detail += fmt::format("q{}: {:.4f}/{:.4f} tol {:.4f}; ", q, est, truth, tol);
        }
        return Outcome{ok, detail};
    });

    report(14, "partition counts", [] {
        const std::uint64_t bell[] = {2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
        bool ok = true;
        for (int n = 2; n <= 10; ++n) {
            std::uint64_t count = 0;
            for_each_set_partition(n, false, [&](const SetPartition &) { ++count; });
            ok = ok && count == bell[n - 2] && bell_number(n) == bell[n - 2];
        }
        return Outcome{ok, "n = 2..10 up to 115975"};
    });

    report(15, "fabric copula", [] {
        std::mt19937_64 rng(15);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::uniform_int_distribution<int> groups(1, 2);
        double margin = 0.0;
        for (int draw = 0; draw < 100; ++draw) {
            const int n = groups(rng) + 1;
            const int k = 1 + draw % 4;
            FabricParams p;
            p.p.assign(static_cast<std::size_t>(n - 1), std::vector<double>(static_cast<std::size_t>(k)));
            for (auto &row : p.p) {
                for (auto &x : row) {
                    x = u(rng);
                }
            }
            margin = std::max(margin, simulate_grid(circuits::build_fabric(p)).max_margin_deviation());
        }
        const FabricParams p{{{0.8, 0.5, 0.3}, {0.6, 0.9, 0.2}}};
        const auto g = simulate_grid(circuits::build_fabric(p));
        const auto ref = fabric_reference(p, 3);
        const double brute[] = {grid_spearman(g, 0, 1), grid_spearman(g, 0, 2), grid_spearman(g, 1, 2)};
        std::string detail = fmt::format("margin deviation {:.3g}; rho printed vs grid:", margin);
        for (int i = 0; i < 3; ++i) {
            detail += fmt::format(" {:.5f}/{:.5f}", ref.rho_printed[i], brute[i]);
        }
        detail += fmt::format("; hidden rho12 {:.5f}, tail product {:.5f}", ref.rho_hidden[0][1],
                              ref.tail_product[0][1]);
        return Outcome{margin < 1e-12 && std::isfinite(ref.rho_hidden[0][1]), detail};
    });

    report(16, "synthesizer round trips", [] {
        std::mt19937_64 rng(16);
        std::exponential_distribution<double> e(1.0);
        auto simplex = [&](std::size_t len) {
            std::vector<double> p(len);
            double s = 0.0;
            for (auto &x : p) {
                s += x = e(rng);
            }
            for (auto &x : p) {
                x /= s;
            }
            return p;
        };
        const std::vector<int> two{1, 0};
        const std::vector<int> three{2, 0, 1};
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const auto p4 = simplex(4);
            worst = std::max(worst, max_err(realized_msb(synth::synth2(p4, 1, 0), two), p4));
            const auto p5 = simplex(5);
            worst = std::max(worst, max_err(realized_msb(synth::synth3_5(p5, 2, 0, 1), three), p5));
            const auto p8 = simplex(8);
            worst = std::max(worst, max_err(realized_msb(synth::conditional_loader(p8, three), three), p8));
        }
        return Outcome{worst < 1e-12, fmt::format("3000 vectors, max error {:.3g}", worst)};
    });

    report(17, "QASM round trips", [] {
        using namespace circuits;
        std::vector<qsim::Circuit> all;
        for (int k : {1, 2}) {
            for (auto f : {Fundamental::M2, Fundamental::W2, Fundamental::Pi}) {
                all.push_back(build_fundamental(f, k));
            }
            all.push_back(build_fundamental(Fundamental::Pi, k, 3));
            all.push_back(build_b11_pure(0.3, k));
            all.push_back(build_b11_mixed(0.3, k));
            all.push_back(build_mb11_mixed(to_double(eq15()), k));
            all.push_back(build_mb11_mixed(to_double(half111_112()), k));
            all.push_back(build_mb11_pure3(to_double(eq15()), k));
            all.push_back(build_frechet3_pure({3, {{SetPartition::parse("{{1,-3},{2}}"), 0.4},
                                                   {SetPartition::independence(3), 0.6}}},
                                              k));
            all.push_back(build_benchmark4(k));
            const ArchimedeanParams gumbel{ArchimedeanFamily::Gumbel, 2.0};
            all.push_back(build_generic(discretize_cdf(
                                            [&](double a, double b) { return archimedean_cdf(gumbel, a, b); }, k))
                              .circuit);
            FabricParams fp;
            fp.p.assign(2, std::vector<double>(static_cast<std::size_t>(k), 0.7));
            all.push_back(build_fabric(fp));
        }
        all.push_back(build_b11_pure(-0.6, 1));
        all.push_back(build_mn_pin(0.4, 3));
        double worst = 0.0;
        for (const auto &c : all) {
            worst = std::max(worst, state_distance(c, io::parse_qasm(io::to_qasm(c))));
        }
        return Outcome{worst < 1e-9, fmt::format("{} circuits, max amplitude error {:.3g}", all.size(), worst)};
    });

    return failures == 0 ? 0 : 1;
}
