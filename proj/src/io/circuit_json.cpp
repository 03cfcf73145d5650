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
#include "qcopula/io/circuit_json.hpp"

#include <json.hpp>
#include <stdexcept>

namespace qcopula::io {

using nlohmann::json;
using qsim::Gate;
using qsim::GateKind;

namespace {

GateKind kind_from_string(const std::string &s) {
    for (auto k : {GateKind::X, GateKind::H, GateKind::Ry, GateKind::CNOT,
                   GateKind::SWAP, GateKind::Phase, GateKind::Controlled}) {
        if (qsim::to_string(k) == s) {
            return k;
        }
    }
    throw std::invalid_argument("unknown gate kind '" + s + "'");
}

json gate_to_json(const Gate &g) {
    json j;
    j["kind"] = qsim::to_string(g.kind);
    j["targets"] = g.targets;
    if (g.kind == GateKind::Ry || g.kind == GateKind::Phase) {
        j["angle"] = g.angle;
    }
    if (g.kind == GateKind::Controlled) {
        json controls = json::array();
        for (const auto &c : g.controls) {
            controls.push_back({{"qubit", c.qubit}, {"value", c.value}});
        }
        j["controls"] = controls;
        json body = json::array();
        for (const auto &b : g.body) {
            body.push_back(gate_to_json(b));
        }
        j["body"] = body;
    }
    return j;
}

Gate gate_from_json(const json &j) {
    Gate g;
    g.kind = kind_from_string(j.at("kind").get<std::string>());
    g.targets = j.value("targets", std::vector<int>{});
    g.angle = j.value("angle", 0.0);
    if (j.contains("controls")) {
        for (const auto &c : j.at("controls")) {
            g.controls.push_back({c.at("qubit").get<int>(), c.at("value").get<bool>()});
        }
    }
    if (j.contains("body")) {
        for (const auto &b : j.at("body")) {
            g.body.push_back(gate_from_json(b));
        }
    }
    return g;
}

} // namespace

std::string circuit_to_json(const qsim::Circuit &circuit, int indent) {
    json j;
    j["schema"] = kCircuitSchema;
    j["num_qubits"] = circuit.num_qubits();
    j["layout"] = {{"variables", circuit.layout().variables},
                   {"controls", circuit.layout().controls}};
    json gates = json::array();
    for (const auto &g : circuit.gates()) {
        gates.push_back(gate_to_json(g));
    }
    j["gates"] = gates;
    return j.dump(indent);
}

qsim::Circuit circuit_from_json(const std::string &text) {
    try {
        const json j = json::parse(text);
        if (j.value("schema", std::string{}) != kCircuitSchema) {
            throw std::invalid_argument("expected schema " +
                                        std::string(kCircuitSchema));
        }
        qsim::Layout layout;
        const auto &l = j.at("layout");
        layout.variables = l.at("variables").get<std::vector<std::vector<int>>>();
        layout.controls = l.at("controls").get<std::vector<int>>();
        qsim::Circuit c(j.at("num_qubits").get<int>(), layout);
        for (const auto &g : j.at("gates")) {
            c.append(gate_from_json(g));
        }
        return c;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed circuit JSON: ") +
                                    e.what());
    }
}

} // namespace qcopula::io
