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
#include "qcopula/qsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcopula::qsim {

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::X:
        return "x";
    case GateKind::H:
        return "h";
    case GateKind::Ry:
        return "ry";
    case GateKind::CNOT:
        return "cx";
    case GateKind::SWAP:
        return "swap";
    case GateKind::Phase:
        return "phase";
    case GateKind::Controlled:
        return "controlled";
    }
    return "?";
}

std::vector<int> Gate::qubits() const {
    std::vector<int> out = targets;
    for (const auto &c : controls) {
        out.push_back(c.qubit);
    }
    for (const auto &g : body) {
        const auto inner = g.qubits();
        out.insert(out.end(), inner.begin(), inner.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace gates {

Gate x(int q) { return Gate{GateKind::X, {q}, 0.0, {}, {}}; }
Gate h(int q) { return Gate{GateKind::H, {q}, 0.0, {}, {}}; }
Gate ry(int q, double angle) { return Gate{GateKind::Ry, {q}, angle, {}, {}}; }
Gate cnot(int control, int target) {
    return Gate{GateKind::CNOT, {control, target}, 0.0, {}, {}};
}
Gate swap(int a, int b) { return Gate{GateKind::SWAP, {a, b}, 0.0, {}, {}}; }
Gate phase(int q, double angle) {
    return Gate{GateKind::Phase, {q}, angle, {}, {}};
}
Gate controlled(std::vector<Control> controls, std::vector<Gate> body) {
    return Gate{GateKind::Controlled, {}, 0.0, std::move(controls),
                std::move(body)};
}

} // namespace gates

std::vector<int> Layout::copula_qubits() const {
    std::vector<int> out;
    for (const auto &v : variables) {
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

Circuit::Circuit(int num_qubits, Layout layout)
    : num_qubits_(num_qubits), layout_(std::move(layout)) {
    if (num_qubits < 1) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

void Circuit::set_layout(Layout layout) { layout_ = std::move(layout); }

void Circuit::append(Gate gate) {
    validate_gate(gate, num_qubits_);
    gates_.push_back(std::move(gate));
}

void Circuit::append(const std::vector<Gate> &fragment) {
    for (const auto &g : fragment) {
        append(g);
    }
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw std::invalid_argument("appended circuit is wider than target");
    }
    append(other.gates_);
}

namespace {
std::size_t count_gates(const std::vector<Gate> &gates) {
    std::size_t n = 0;
    for (const auto &g : gates) {
        n += g.kind == GateKind::Controlled ? count_gates(g.body) : 1;
    }
    return n;
}

void check_index(int q, int num_qubits) {
    if (q < 0 || q >= num_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(q) +
                                " outside register of " +
                                std::to_string(num_qubits));
    }
}

void validate_impl(const Gate &gate, int num_qubits,
                   std::vector<int> &active_controls) {
    auto expect_targets = [&](std::size_t n) {
        if (gate.targets.size() != n) {
            throw std::invalid_argument(to_string(gate.kind) + " expects " +
                                        std::to_string(n) + " target(s)");
        }
    };
    auto disjoint = [&](int q) {
        if (std::find(active_controls.begin(), active_controls.end(), q) !=
            active_controls.end()) {
            throw std::invalid_argument("qubit " + std::to_string(q) +
                                        " is both control and target");
        }
    };
    switch (gate.kind) {
    case GateKind::X:
    case GateKind::H:
        expect_targets(1);
        break;
    case GateKind::Ry:
    case GateKind::Phase:
        expect_targets(1);
        if (!std::isfinite(gate.angle)) {
            throw std::invalid_argument("non-finite rotation angle");
        }
        break;
    case GateKind::CNOT:
    case GateKind::SWAP:
        expect_targets(2);
        if (gate.targets[0] == gate.targets[1]) {
            throw std::invalid_argument(to_string(gate.kind) +
                                        " needs two distinct qubits");
        }
        break;
    case GateKind::Controlled: {
        if (!gate.targets.empty()) {
            throw std::invalid_argument("controlled block takes no targets");
        }
        const auto mark = active_controls.size();
        for (const auto &c : gate.controls) {
            check_index(c.qubit, num_qubits);
            disjoint(c.qubit);
            active_controls.push_back(c.qubit);
        }
        for (const auto &inner : gate.body) {
            validate_impl(inner, num_qubits, active_controls);
        }
        active_controls.resize(mark);
        return;
    }
    }
    for (int q : gate.targets) {
        check_index(q, num_qubits);
        disjoint(q);
    }
}
} // namespace

std::size_t Circuit::gate_count() const { return count_gates(gates_); }

void Circuit::check_layout() const {
    std::vector<int> seen(static_cast<std::size_t>(num_qubits_), 0);
    const auto k = layout_.resolution();
    auto mark = [&](int q) {
        check_index(q, num_qubits_);
        if (seen[static_cast<std::size_t>(q)]++ != 0) {
            throw std::invalid_argument("qubit " + std::to_string(q) +
                                        " has two layout roles");
        }
    };
    for (const auto &v : layout_.variables) {
        if (v.size() != k || k == 0) {
            throw std::invalid_argument(
                "layout variables must share one nonzero resolution");
        }
        for (int q : v) {
            mark(q);
        }
    }
    for (int q : layout_.controls) {
        mark(q);
    }
    for (int q = 0; q < num_qubits_; ++q) {
        if (seen[static_cast<std::size_t>(q)] == 0) {
            throw std::invalid_argument("qubit " + std::to_string(q) +
                                        " has no layout role");
        }
    }
}

void validate_gate(const Gate &gate, int num_qubits) {
    std::vector<int> controls;
    validate_impl(gate, num_qubits, controls);
}

std::vector<Gate> inverse(const std::vector<Gate> &gates) {
    std::vector<Gate> out;
    out.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
        case GateKind::Ry:
        case GateKind::Phase:
            g.angle = -g.angle;
            break;
        case GateKind::Controlled:
            g.body = inverse(it->body);
            break;
        default:
            break;
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Gate> controlled_fragment(const std::vector<Control> &controls,
                                      std::vector<Gate> fragment) {
    if (controls.empty() || fragment.empty()) {
        return fragment;
    }
    return {gates::controlled(controls, std::move(fragment))};
}

} // namespace qcopula::qsim
