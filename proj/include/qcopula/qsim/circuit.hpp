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
#include <string>
#include <vector>

namespace qcopula::qsim {

enum class GateKind { X, H, Ry, CNOT, SWAP, Phase, Controlled };

std::string to_string(GateKind kind);

/// Condition on one qubit of a controlled block: fires when the qubit reads
/// `value`.
struct Control {
    int qubit = 0;
    bool value = true;

    friend bool operator==(const Control &, const Control &) = default;
};

/**
 * One circuit element.
 *
 * X, H, Ry and Phase act on `targets[0]`. CNOT uses `targets = {control,
 * target}`, SWAP the two qubits in `targets`. A Controlled gate carries no
 * targets of its own; it applies `body` on the subspace where every entry of
 * `controls` matches.
 */
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<int> targets;
    double angle = 0.0;
    std::vector<Control> controls;
    std::vector<Gate> body;

    /// All qubits touched by the gate, including nested controls.
    std::vector<int> qubits() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

namespace gates {
Gate x(int q);
Gate h(int q);
Gate ry(int q, double angle);
Gate cnot(int control, int target);
Gate swap(int a, int b);
/// diag(1, e^{i angle})
Gate phase(int q, double angle);
Gate controlled(std::vector<Control> controls, std::vector<Gate> body);
} // namespace gates

/// Which qubits form each copula variable (most-significant first) and which
/// are control/ancilla qubits.
struct Layout {
    std::vector<std::vector<int>> variables;
    std::vector<int> controls;

    std::size_t resolution() const {
        return variables.empty() ? 0 : variables.front().size();
    }
    /// Variable qubits flattened, variable 0 first.
    std::vector<int> copula_qubits() const;

    friend bool operator==(const Layout &, const Layout &) = default;
};

/// Ordered gate list over a fixed register. Appending validates indices.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(int num_qubits, Layout layout = {});

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    const Layout &layout() const { return layout_; }
    void set_layout(Layout layout);

    void append(Gate gate);
    void append(const std::vector<Gate> &fragment);
    void append(const Circuit &other);

    /// Number of gates, counting nested bodies recursively.
    std::size_t gate_count() const;

    /// Throws std::invalid_argument unless the layout assigns every qubit to
    /// exactly one role and all variables share one resolution.
    void check_layout() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    int num_qubits_ = 0;
    std::vector<Gate> gates_;
    Layout layout_;
};

/// Throws std::out_of_range / std::invalid_argument when a gate does not fit
/// a register of `num_qubits` qubits.
void validate_gate(const Gate &gate, int num_qubits);

/// Adjoint of a gate sequence.
std::vector<Gate> inverse(const std::vector<Gate> &gates);

/// Wraps a fragment so it only fires under `controls`; empty controls return
/// the fragment unchanged.
std::vector<Gate> controlled_fragment(const std::vector<Control> &controls,
                                      std::vector<Gate> fragment);

} // namespace qcopula::qsim
