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
#include "families.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qcopula/circuits.hpp"
#include "qcopula/copula/archimedean.hpp"
#include "qcopula/copula/mb11.hpp"
#include "qcopula/io/circuit_json.hpp"
#include "qcopula/io/qasm.hpp"
#include "qcopula/io/table.hpp"

namespace qcopula::cli {

using copula::ExactMb11Spec;
using copula::Rational;
using copula::SetPartition;

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "{{1,2,3}}=1/16;{{1,2},{3}}=7/16"
ExactMb11Spec parse_weights(const std::string &text) {
    ExactMb11Spec spec;
    for (const auto &item : split(text, ';')) {
        const auto eq = item.rfind('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("weight entry '" + item +
                                        "' must read partition=weight");
        }
        const auto part = SetPartition::parse(item.substr(0, eq));
        spec.n = part.size();
        spec.entries.emplace_back(part, copula::parse_rational(item.substr(eq + 1)));
    }
    spec.validate();
    return spec;
}

ExactMb11Spec trivariate_spec(const FamilyOptions &o) {
    if (!o.weights.empty()) {
        return parse_weights(o.weights);
    }
    const auto l = split(o.lambda, ',');
    if (l.size() != 4) {
        throw std::invalid_argument(
            "--lambda takes lambda12,lambda13,lambda23,lambda123");
    }
    return copula::mb11_weights_from_taildep(
        copula::parse_rational(l[0]), copula::parse_rational(l[1]),
        copula::parse_rational(l[2]), copula::parse_rational(l[3]));
}

copula::CopulaGrid grid_of(const ExactMb11Spec &spec, int k) {
    return copula::mixture_grid(copula::to_double(spec), k);
}

} // namespace

std::vector<std::string> family_names() {
    return {"m2",        "w2",         "pi",        "b11-pure",  "ls",
            "b11-mixed", "frechet2",   "mn-pin",    "mb11-mixed", "mb11-pure3",
            "frechet3",  "benchmark4", "generic",   "fabric"};
}

Instance make_instance(const FamilyOptions &o) {
    namespace cs = circuits;
    if (!o.circuit_path.empty()) {
        const auto text = slurp(o.circuit_path);
        const bool qasm = o.circuit_path.size() > 5 &&
                          o.circuit_path.substr(o.circuit_path.size() - 5) == ".qasm";
        return {qasm ? io::parse_qasm(text) : io::circuit_from_json(text), {}, 0};
    }
    const auto &f = o.family;
    const int k = o.k;
    const Rational alpha = copula::parse_rational(o.alpha);
    const double a = copula::to_double(alpha);
    if (f == "m2" || f == "w2") {
        const auto kind = f == "m2" ? cs::Fundamental::M2 : cs::Fundamental::W2;
        const auto part = f == "m2" ? SetPartition::comonotone(2)
                                    : SetPartition::parse("{{1,-2}}");
        return {cs::build_fundamental(kind, k), copula::canonical_grid(part, k), 0};
    }
    if (f == "pi") {
        const int n = o.n ? o.n : 2;
        return {cs::build_fundamental(cs::Fundamental::Pi, k, n),
                copula::canonical_grid(SetPartition::independence(n), k), 0};
    }
    if (f == "b11-pure" || f == "ls") {
        return {cs::build_b11_pure(a, k), grid_of(copula::b11_spec(alpha), k), 0};
    }
    if (f == "b11-mixed") {
        return {cs::build_b11_mixed(a, k), grid_of(copula::b11_spec(alpha), k), 0};
    }
    if (f == "frechet2") {
        const auto spec = copula::frechet2_spec(alpha, copula::parse_rational(o.beta));
        return {cs::build_mb11_mixed(copula::to_double(spec), k), grid_of(spec, k), 0};
    }
    if (f == "mn-pin") {
        const int n = o.n ? o.n : 3;
        ExactMb11Spec spec{n, {}};
        spec.entries.emplace_back(SetPartition::comonotone(n), alpha);
        spec.entries.emplace_back(SetPartition::independence(n), Rational(1) - alpha);
        return {cs::build_mn_pin(a, n), grid_of(spec, 1), 0};
    }
    if (f == "mb11-mixed" || f == "mb11-pure3" || f == "frechet3") {
        const auto spec = trivariate_spec(o);
        const auto d = copula::to_double(spec);
        auto circuit = f == "mb11-mixed" ? cs::build_mb11_mixed(d, k)
                                         : cs::build_mb11_pure3(d, k);
        return {std::move(circuit), grid_of(spec, k), 0};
    }
    if (f == "benchmark4") {
        return {cs::build_benchmark4(k), grid_of(cs::benchmark4_spec(), k), 0};
    }
    if (f == "generic") {
        copula::CopulaGrid grid;
        if (!o.grid_path.empty()) {
            std::ifstream in(o.grid_path, std::ios::binary);
            if (!in) {
                throw std::runtime_error("cannot read " + o.grid_path);
            }
            grid = io::read_grid_csv(in);
        } else {
            const copula::ArchimedeanParams params{
                copula::parse_family(o.archimedean), o.theta};
            params.validate();
            grid = copula::discretize_cdf(
                [params](double u, double v) {
                    return copula::archimedean_cdf(params, u, v);
                },
                k);
        }
        auto built = cs::build_generic(grid);
        return {std::move(built.circuit), grid, built.synthesizers};
    }
    if (f == "fabric") {
        copula::FabricParams params;
        for (const auto &row : split(o.fabric_p, ';')) {
            std::vector<double> values;
            for (const auto &v : split(row, ',')) {
                values.push_back(copula::to_double(copula::parse_rational(v)));
            }
            params.p.push_back(std::move(values));
        }
        auto circuit = cs::build_fabric(params);
        return {circuit, copula::fabric_grid(params), 0};
    }
    throw std::invalid_argument("unknown family '" + f + "'");
}

} // namespace qcopula::cli
