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

/// OpenQASM 2.0 export over {x, h, ry, cx, swap, ccx, u1}.
///
/// Controlled blocks are flattened to elementary gates without ancillas:
/// negative controls are conjugated by x, multi-controlled ry becomes a
/// Gray-code ladder of ry and cx, and multi-controlled phases a parity
/// network of cx and u1. The cost grows as 2^(controls), which is fine at
/// the register sizes this library builds. The layout is kept in
/// "// layout" comment lines so the parser can restore it.
namespace qcopula::io {

std::string to_qasm(const qsim::Circuit &circuit);

/// Parses the subset written by to_qasm (plus "pi", "*", "/" and unary
/// minus in angles). Throws std::invalid_argument with the line number on
/// anything else.
qsim::Circuit parse_qasm(const std::string &text);

} // namespace qcopula::io
