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

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qcopula/qsim/circuit.hpp"

namespace qcopula::qsim {

using Amplitude = std::complex<double>;

enum class Backend { Serial, Parallel };

/// Unit-norm amplitude vector over `num_qubits` qubits. Basis index bit i
/// holds the value of qubit i.
class Statevector {
  public:
    /// |0...0>
    explicit Statevector(int num_qubits);
    /// Throws std::invalid_argument unless the length is a power of two and
    /// the norm is 1 within 1e-12.
    Statevector(int num_qubits, std::vector<Amplitude> amplitudes);

    static Statevector basis(int num_qubits, std::uint64_t index);

    int num_qubits() const { return num_qubits_; }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    std::span<Amplitude> amplitudes() { return amplitudes_; }
    std::uint64_t dimension() const { return amplitudes_.size(); }
    double norm() const;

  private:
    int num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Probabilities over the bitstrings of `qubits`; outcome bit i is the value
/// of `qubits[i]`.
struct DiscreteDistribution {
    std::vector<int> qubits;
    std::vector<double> probabilities;

    double total() const;
};

using Counts = std::map<std::uint64_t, std::uint64_t>;

/// Largest register circuit_unitary will materialize.
inline constexpr int kMaxUnitaryQubits = 14;

void set_default_backend(Backend backend);
Backend default_backend();

/// In-place gate application.
void apply(Statevector &state, const Gate &gate);
void apply(Statevector &state, const Gate &gate, Backend backend);
void apply(Statevector &state, const std::vector<Gate> &gates);
void apply(Statevector &state, const std::vector<Gate> &gates,
           Backend backend);

Statevector apply_gate(Statevector state, const Gate &gate);

/// Applies every gate of `circuit` to |0...0>.
Statevector run(const Circuit &circuit);
Statevector run(const Circuit &circuit, Backend backend);
/// Applies `circuit` to an arbitrary starting state of the same width.
Statevector run(const Circuit &circuit, Statevector initial);

DiscreteDistribution distribution(const Statevector &state,
                                  const std::vector<int> &keep);
/// All qubits, outcome index equal to basis index.
DiscreteDistribution distribution(const Statevector &state);

/// Draws `shots` outcomes with std::mt19937_64 seeded by `seed`. Uniform
/// variates are formed as `(word >> 11) * 2^-53`, so counts depend only on
/// the seed and the probabilities, not on the standard library.
Counts sample(const DiscreteDistribution &dist, std::uint64_t shots,
              std::uint64_t seed);
Counts sample(const Statevector &state, std::uint64_t shots,
              std::uint64_t seed);

/// Row-major 2^m x 2^m matrix; column j is run(circuit) from |j>.
struct Unitary {
    int num_qubits = 0;
    std::vector<Amplitude> entries;

    std::uint64_t dimension() const { return std::uint64_t{1} << num_qubits; }
    Amplitude operator()(std::uint64_t row, std::uint64_t col) const {
        return entries[row * dimension() + col];
    }
};

/// Throws BudgetExceeded beyond kMaxUnitaryQubits.
Unitary circuit_unitary(const Circuit &circuit);

/// max |(U^dagger U - I)_{ij}|
double unitarity_defect(const Unitary &u);

} // namespace qcopula::qsim
