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

#include <optional>
#include <string>
#include <vector>

#include "qcopula/copula/grid.hpp"
#include "qcopula/qsim/circuit.hpp"

namespace qcopula::cli {

/// Command-line description of a copula instance.
struct FamilyOptions {
    std::string family;
    int k = 2;
    int n = 0;
    std::string alpha = "1/2";
    std::string beta = "0";
    std::string lambda;
    std::string weights;
    std::string archimedean = "gumbel";
    double theta = 2.0;
    std::string grid_path;
    std::string fabric_p;
    std::string circuit_path;
};

struct Instance {
    qsim::Circuit circuit;
    /// Classical grid the circuit must reproduce, when the family has one.
    std::optional<copula::CopulaGrid> reference;
    std::size_t synthesizers = 0;
};

/// Names accepted by make_instance.
std::vector<std::string> family_names();

/// Builds the circuit (and classical oracle) for a family, or loads a
/// circuit file (.qasm or JSON) when circuit_path is set.
Instance make_instance(const FamilyOptions &opts);

} // namespace qcopula::cli
