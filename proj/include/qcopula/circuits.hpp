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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qcopula/copula/fabric.hpp"
#include "qcopula/copula/grid.hpp"
#include "qcopula/copula/mb11.hpp"
#include "qcopula/qsim/circuit.hpp"
#include "qcopula/qsim/simulator.hpp"

/// Copula-sampling circuit builders. Every builder's output, measured on its
/// layout's variable qubits, equals the matching classical grid cellwise.
///
/// Register convention: variable v occupies qubits v*k .. v*k + k - 1, most
/// significant digit first; control qubits follow the copula qubits.
namespace qcopula::circuits {

using copula::CopulaGrid;
using copula::Mb11Spec;
using qsim::Circuit;

/// Largest register the mixed-state builders will emit.
inline constexpr int kMaxMixedQubits = 22;

enum class Fundamental { M2, W2, Pi };

/// M2: H on variable 1, CNOT copies onto variable 2. W2: same plus X on each
/// copied qubit. Pi: H on all n k qubits.
Circuit build_fundamental(Fundamental kind, int k, int n = 2);

/// Mixing coefficient of the digit-`level` B11 block (level 1 is the most
/// significant digit): 2^(l-1) a / (1 + (2^(l-1) - 1) a).
double b11_level_alpha(double alpha, int level);

/// Pure-state B11 on 2k qubits. The first digit pair is a one-digit B11
/// block; each deeper pair runs B11(alpha_l) when all previous pairs are
/// equal and H (x) H otherwise. Negative alpha (LS copula) is accepted only
/// for k = 1; throws std::invalid_argument otherwise.
Circuit build_b11_pure(double alpha, int k);

/// 2 arcsin(sqrt(1 - a) / (sqrt 2 sqrt(1 + a))): rotation of the third qubit
/// of alpha M_n + (1 - alpha) Pi_n when the first two agree.
double mn_pin_reference_angle(double alpha);

/// alpha M_n + (1 - alpha) Pi_n with one digit per variable.
Circuit build_mn_pin(double alpha, int n);

/// Mixed-state B11: control qubit 2k selects M2 (|1>) or Pi2 (|0>).
Circuit build_b11_mixed(double alpha, int k);

/// Mixed-state mixture of canonical copulas. The control register holds
/// ceil(log2 m) qubits for the m components of nonzero weight: five
/// components are loaded with synth3_5, fewer or more with the conditional
/// tree. Each control state gates one canonical block.
Circuit build_mb11_mixed(const Mb11Spec &spec, int k);

/// Factor of a canonical copula at one-digit pattern `bits` (variable 0 in
/// the most significant position): 2^-blocks on its support, else 0.
template <class Scalar>
Scalar pattern_factor(const copula::SetPartition &partition, unsigned bits);

/// Most-significant-digit probabilities of |000>..|011> for a trivariate
/// spec (the other four states are their mirror images).
template <class Scalar>
std::array<Scalar, 4>
cqg_probabilities(const copula::BasicMb11Spec<Scalar> &spec);

/// Mixture weights that drive the digit after `context`: the component
/// weights rescaled by the Table-style factors of every earlier digit pattern
/// and renormalized. `context` lists reduced patterns 0..3 (|000>..|011>),
/// most significant digit first. Throws std::domain_error if the context has
/// zero probability.
template <class Scalar>
std::vector<Scalar>
pure3_child_weights(const copula::BasicMb11Spec<Scalar> &spec,
                    std::span<const int> context);

/// Pure-state trivariate mixture on exactly 3k qubits. Works for unsigned
/// and signed (Frechet) partitions alike.
Circuit build_mb11_pure3(const Mb11Spec &spec, int k);
Circuit build_frechet3_pure(const Mb11Spec &spec, int k);

/// Control-state loader angles (phi1, phi2, phi3) of the four-variable
/// benchmark.
std::array<double, 3> benchmark4_control_angles();
/// (C1231 + C1232 + C1233) / 3
copula::ExactMb11Spec benchmark4_spec();
/// Four variables, k digits each, plus two control qubits whose states
/// |00>, |01>, |10> each carry 1/3 and select which of variables 1-3 the
/// fourth variable copies.
Circuit build_benchmark4(int k);

struct GenericCircuit {
    Circuit circuit;
    std::size_t synthesizers = 0;
};

/// (2^(k n) - 1) / (2^n - 1)
std::uint64_t generic_synthesizer_count(int n, int k);

/// Pure-state loader for any discretized copula with n = 2 or 3: digit l of
/// all variables is loaded by one synthesizer per value of the upper l digits.
/// Throws MarginViolation for grids without uniform margins (1e-9).
GenericCircuit build_generic(const CopulaGrid &grid);

/// Fabric copula: digit l of variable j + 1 agrees with digit l of variable 0
/// with probability (1 + p[j][l]) / 2, independently across digits.
Circuit build_fabric(const copula::FabricParams &params);

/// Measured copula grid of `state` under `layout`, ancillas traced out.
CopulaGrid copula_grid(const qsim::Statevector &state,
                       const qsim::Layout &layout);
CopulaGrid simulate_grid(const Circuit &circuit);

} // namespace qcopula::circuits
