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
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "families.hpp"
#include "qcopula/circuits.hpp"
#include "qcopula/copula/analysis.hpp"
#include "qcopula/error.hpp"
#include "qcopula/io/circuit_json.hpp"
#include "qcopula/io/qasm.hpp"
#include "qcopula/io/table.hpp"
#include "qcopula/qsim/simulator.hpp"
#include "qcopula/riskq.hpp"

using namespace qcopula;

namespace {

struct Common {
    cli::FamilyOptions family;
    std::string format;
    std::string out;
    std::string heatmap;
    int m = 7;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    std::string level;
    std::string coefficients = "16,4";
    std::string q_list;
};

void add_family_options(CLI::App *cmd, Common &c, bool positional = true) {
    auto &f = c.family;
    if (positional) {
        cmd->add_option("copula", f.family, "copula family")
            ->check(CLI::IsMember(cli::family_names()));
    }
    cmd->add_option("--k", f.k, "binary digits per variable")->check(CLI::Range(1, 12));
    cmd->add_option("--n", f.n, "number of variables (pi, mn-pin)");
    cmd->add_option("--alpha", f.alpha, "mixing weight, p/q or decimal");
    cmd->add_option("--beta", f.beta, "countermonotone weight (frechet2)");
    cmd->add_option("--lambda", f.lambda, "lambda12,lambda13,lambda23,lambda123");
    cmd->add_option("--weights", f.weights, "partition=weight;... e.g. {{1,2},{3}}=1/2");
    cmd->add_option("--family", f.archimedean, "gumbel or clayton (generic)");
    cmd->add_option("--theta", f.theta, "Archimedean parameter (generic)");
    cmd->add_option("--grid", f.grid_path, "grid CSV (generic)");
    cmd->add_option("--p", f.fabric_p, "fabric parameters, groups ';' digits ','");
    cmd->add_option("--circuit", f.circuit_path, "circuit file (.qasm or JSON)");
}

class Output {
  public:
    explicit Output(const std::string &path, bool binary = false) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(
                path, binary ? std::ios::binary : std::ios::out);
            if (!*file_) {
                throw std::runtime_error("cannot write " + path);
            }
        }
    }
    std::ostream &stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

copula::CopulaGrid measured(const qsim::Circuit &c) {
    if (c.num_qubits() > 24) {
        throw BudgetExceeded("simulation is limited to 24 qubits");
    }
    return circuits::simulate_grid(c);
}

cli::Instance instance_for(const Common &c) {
    if (c.family.family.empty() && c.family.circuit_path.empty()) {
        throw std::invalid_argument("give a family or --circuit");
    }
    return cli::make_instance(c.family);
}

int cmd_build(const Common &c) {
    const auto inst = instance_for(c);
    Output out(c.out);
    if (c.format == "qasm") {
        out.stream() << io::to_qasm(inst.circuit);
    } else {
        out.stream() << io::circuit_to_json(inst.circuit) << "\n";
    }
    return 0;
}

int cmd_simulate(Common c) {
    if (c.format.empty()) {
        c.format = "csv";
    }
    const auto inst = instance_for(c);
    const auto grid = measured(inst.circuit);
    if (!c.heatmap.empty()) {
        Output pgm(c.heatmap, true);
        io::write_grid_pgm(pgm.stream(), grid);
    }
    Output out(c.out, c.format == "pgm");
    if (c.format == "json") {
        nlohmann::json j;
        j["n"] = grid.dimension();
        j["k"] = grid.resolution();
        j["cells"] = std::vector<double>(grid.cells().begin(), grid.cells().end());
        out.stream() << j.dump() << "\n";
    } else if (c.format == "pgm") {
        io::write_grid_pgm(out.stream(), grid);
    } else {
        io::write_grid_csv(out.stream(), grid);
    }
    return 0;
}

int cmd_sample(const Common &c) {
    const auto inst = instance_for(c);
    const auto grid = measured(inst.circuit);
    qsim::DiscreteDistribution dist;
    dist.probabilities.assign(grid.cells().begin(), grid.cells().end());
    const auto counts = qsim::sample(dist, c.shots ? c.shots : 1000, c.seed);
    std::vector<std::string> header;
    for (int v = 0; v < grid.dimension(); ++v) {
        header.push_back("x" + std::to_string(v + 1));
    }
    header.push_back("count");
    std::vector<std::vector<std::string>> rows;
    for (const auto &[flat, count] : counts) {
        std::vector<std::string> row;
        for (int v = 0; v < grid.dimension(); ++v) {
            row.push_back(std::to_string(grid.cell_of(flat, v)));
        }
        row.push_back(std::to_string(count));
        rows.push_back(std::move(row));
    }
    Output out(c.out);
    io::write_csv(out.stream(), header, rows);
    return 0;
}

int cmd_verify(const Common &c) {
    bool ok = true;
    auto report = [&](bool pass, const std::string &what) {
        std::printf("%s %s\n", pass ? "PASS" : "FAIL", what.c_str());
        ok = ok && pass;
    };
    cli::Instance inst;
    try {
        inst = instance_for(c);
    } catch (const MarginViolation &e) {
        report(false, std::string("margins: ") + e.what());
        return 1;
    }
    const auto &circ = inst.circuit;
    std::printf("qubits %d, gates %zu\n", circ.num_qubits(), circ.gate_count());
    try {
        circ.check_layout();
        report(true, "layout");
    } catch (const std::exception &e) {
        report(false, std::string("layout: ") + e.what());
    }
    const auto grid = measured(circ);
    const double dev = grid.max_margin_deviation();
    report(dev <= 1e-9, "margins uniform, max deviation " + io::format_double(dev));
    if (inst.reference) {
        const double err = copula::max_abs_difference(grid, *inst.reference);
        report(err <= 1e-10, "matches classical grid, max cell error " +
                                 io::format_double(err));
    }
    if (inst.synthesizers) {
        std::printf("synthesizers %zu (full-support count %llu)\n", inst.synthesizers,
                    static_cast<unsigned long long>(circuits::generic_synthesizer_count(
                        grid.dimension(), grid.resolution())));
    }
    const auto &controls = circ.layout().controls;
    if (!controls.empty()) {
        const auto dist = qsim::distribution(qsim::run(circ), controls);
        std::string s = "control distribution";
        // outcome bit i is controls[i]; list states with controls[0] leftmost
        std::vector<double> ordered(dist.probabilities.size());
        for (std::size_t y = 0; y < ordered.size(); ++y) {
            std::uint64_t label = 0;
            for (std::size_t i = 0; i < controls.size(); ++i) {
                label |= ((y >> i) & 1u) << (controls.size() - 1 - i);
            }
            ordered[label] = dist.probabilities[y];
        }
        for (double p : ordered) {
            s += " " + io::format_double(p);
        }
        std::printf("%s\n", s.c_str());
    }
    return ok ? 0 : 1;
}

riskq::LossModel loss_model(const Common &c, int k) {
    riskq::LossModel model;
    std::stringstream ss(c.coefficients);
    std::string item;
    while (std::getline(ss, item, ',')) {
        model.coefficients.push_back(std::stoll(item));
    }
    model.k = k;
    model.validate();
    return model;
}

riskq::AEConfig ae_config(const Common &c) {
    riskq::AEConfig cfg;
    cfg.m = c.m;
    cfg.seed = c.seed;
    if (c.shots) {
        cfg.shots = c.shots;
    }
    cfg.validate();
    return cfg;
}

int cmd_var(Common c) {
    if (c.family.family.empty() && c.family.circuit_path.empty()) {
        c.family.family = "b11-pure";
    }
    const auto inst = instance_for(c);
    const auto grid = measured(inst.circuit);
    const auto model = loss_model(c, grid.resolution());
    const auto cfg = ae_config(c);
    const auto truth = riskq::true_cdf(model, grid);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t v = 0; v < truth.size(); ++v) {
        const auto est = riskq::estimate_cdf(model, inst.circuit,
                                             static_cast<std::int64_t>(v), cfg);
        rows.push_back({std::to_string(v), io::format_double(truth[v]),
                        io::format_double(est.estimate),
                        io::format_double(cfg.step_around(truth[v]))});
    }
    Output out(c.out);
    io::write_csv(out.stream(), {"v", "true_cdf", "estimated_cdf", "grid_step"}, rows);
    if (!c.level.empty()) {
        const double level = copula::to_double(copula::parse_rational(c.level));
        const auto var = riskq::estimate_var(model, inst.circuit, level, cfg);
        std::size_t exact = 0;
        while (exact + 1 < truth.size() && truth[exact] < level) {
            ++exact;
        }
        std::fprintf(stderr, "VaR(%s): estimated %lld after %zu probes, exact %zu\n",
                     c.level.c_str(), static_cast<long long>(var.v),
                     var.probes.size(), exact);
    }
    return 0;
}

int cmd_cqep(Common c) {
    if (c.family.family.empty() && c.family.circuit_path.empty()) {
        c.family.family = "b11-pure";
    }
    const auto inst = instance_for(c);
    const auto grid = measured(inst.circuit);
    const auto cfg = ae_config(c);
    std::vector<std::size_t> qs;
    if (c.q_list.empty()) {
        for (std::size_t q = 0; q < grid.levels(); ++q) {
            qs.push_back(q);
        }
    } else {
        std::stringstream ss(c.q_list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            qs.push_back(std::stoul(item));
        }
    }
    std::vector<std::vector<std::string>> rows;
    for (auto q : qs) {
        const double truth = copula::grid_cqep(grid, 0, 1, q);
        const double est = riskq::estimate_cqep(inst.circuit, q, cfg);
        double joint = 0.0;
        for (std::size_t f = 0; f < grid.size(); ++f) {
            if (grid.cell_of(f, 0) >= q && grid.cell_of(f, 1) >= q) {
                joint += grid[f];
            }
        }
        const double tail = 1.0 - static_cast<double>(q) / static_cast<double>(grid.levels());
        rows.push_back({std::to_string(q), io::format_double(truth),
                        io::format_double(est),
                        io::format_double(cfg.step_around(joint) / tail)});
    }
    Output out(c.out);
    io::write_csv(out.stream(), {"q_index", "true_cqep", "estimated_cqep", "tolerance"},
                  rows);
    return 0;
}

int cmd_unitary(Common c) {
    if (c.format.empty()) {
        c.format = "pgm";
    }
    const auto inst = instance_for(c);
    const auto u = qsim::circuit_unitary(inst.circuit);
    Output out(c.out, c.format != "csv");
    if (c.format == "csv") {
        io::write_unitary_csv(out.stream(), u);
    } else {
        io::write_unitary_pgm(out.stream(), u);
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum circuits for copula sampling and risk estimation"};
    app.require_subcommand(1);
    Common c;

    auto *build = app.add_subcommand("build", "emit a circuit as JSON or OpenQASM 2.0");
    add_family_options(build, c);
    build->add_option("--format", c.format, "json or qasm")
        ->check(CLI::IsMember({"json", "qasm"}));
    build->add_option("--out", c.out, "output file (default stdout)");

    auto *simulate = app.add_subcommand("simulate", "measured copula grid");
    add_family_options(simulate, c);
    simulate->add_option("--format", c.format, "csv, json or pgm")
        ->check(CLI::IsMember({"csv", "json", "pgm"}));
    simulate->add_option("--out", c.out, "output file (default stdout)");
    simulate->add_option("--heatmap", c.heatmap, "also write a PGM heatmap");

    auto *sample = app.add_subcommand("sample", "seeded samples of the grid cells");
    add_family_options(sample, c);
    sample->add_option("--shots", c.shots, "number of samples (default 1000)");
    sample->add_option("--seed", c.seed, "generator seed");
    sample->add_option("--out", c.out, "output file (default stdout)");

    auto *verify = app.add_subcommand("verify", "compare against the classical oracle");
    add_family_options(verify, c);

    auto *var = app.add_subcommand("var", "CDF and VaR by amplitude estimation");
    add_family_options(var, c);
    var->add_option("--m", c.m, "estimation qubits");
    var->add_option("--level", c.level, "VaR level in (0, 1)");
    var->add_option("--coefficients", c.coefficients, "loss coefficients");
    var->add_option("--seed", c.seed, "readout seed");
    var->add_option("--shots", c.shots, "shot-based readout");
    var->add_option("--out", c.out, "output file (default stdout)");

    auto *cqep = app.add_subcommand("cqep", "conditional exceedance by amplitude estimation");
    add_family_options(cqep, c);
    cqep->add_option("--m", c.m, "estimation qubits");
    cqep->add_option("--q", c.q_list, "quantile indices, comma separated");
    cqep->add_option("--seed", c.seed, "readout seed");
    cqep->add_option("--shots", c.shots, "shot-based readout");
    cqep->add_option("--out", c.out, "output file (default stdout)");

    auto *unitary = app.add_subcommand("unitary", "circuit unitary raster");
    add_family_options(unitary, c);
    unitary->add_option("--format", c.format, "pgm or csv")
        ->check(CLI::IsMember({"pgm", "csv"}));
    unitary->add_option("--out", c.out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (build->parsed()) {
            return cmd_build(c);
        }
        if (simulate->parsed()) {
            return cmd_simulate(c);
        }
        if (sample->parsed()) {
            return cmd_sample(c);
        }
        if (verify->parsed()) {
            return cmd_verify(c);
        }
        if (var->parsed()) {
            return cmd_var(c);
        }
        if (cqep->parsed()) {
            return cmd_cqep(c);
        }
        if (unitary->parsed()) {
            return cmd_unitary(c);
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
