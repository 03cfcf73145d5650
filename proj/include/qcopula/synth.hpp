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

#include <span>
#include <vector>

#include "qcopula/qsim/circuit.hpp"

/// Loaders that put a prescribed probability vector onto a few qubits using
/// only real rotations. Every loader is exact: simulating the returned
/// fragment from |0...0> reproduces the target up to rounding.
namespace qcopula::synth {

using Fragment = std::vector<qsim::Gate>;
using ProbVector = std::vector<double>;

/// Entries below this are treated as exact zeros before building a tree.
inline constexpr double kZeroClamp = 1e-15;

/// Throws std::invalid_argument unless `p` has `length` nonnegative entries
/// summing to 1 within 1e-12.
void check_prob_vector(std::span<const double> p, std::size_t length);

/// Angle theta with Ry(theta)|0> measuring |1> with probability p, i.e.
/// p = sin^2(theta / 2).
double bernoulli_angle(double p);

/// Conditional-probability tree over `qubits` (most significant first):
/// qubits[l] is rotated under every value of qubits[0..l-1] by the conditional
/// probability of a one. Unreachable branches emit nothing, and a level whose
/// reachable branches all share one angle collapses to a single rotation.
Fragment conditional_loader(std::span<const double> pdf,
                            std::span<const int> qubits);

/// Four probabilities onto |upper lower>, ordered |00>, |01>, |10>, |11>.
Fragment synth2(std::span<const double> target, int upper, int lower);

/// Five probabilities: targets 1-4 onto |000>..|011> and target 5 onto |100>
/// of (q0 q1 q2). |101>, |110>, |111> stay empty.
Fragment synth3_5(std::span<const double> target, int q0, int q1, int q2);

} // namespace qcopula::synth
