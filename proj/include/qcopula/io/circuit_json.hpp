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

#include <string>

#include "qcopula/qsim/circuit.hpp"

namespace qcopula::io {

inline constexpr const char *kCircuitSchema = "qcopula.circuit/1";

/// {schema, num_qubits, layout{variables, controls}, gates[{kind, targets,
/// angle, controls[{qubit, value}], body}]}. Angles round-trip bit for bit.
std::string circuit_to_json(const qsim::Circuit &circuit, int indent = 2);

/// Throws std::invalid_argument on a wrong schema tag or malformed gates.
qsim::Circuit circuit_from_json(const std::string &text);

} // namespace qcopula::io
