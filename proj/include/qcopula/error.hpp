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

#include <stdexcept>
#include <string>

namespace qcopula {

/// A tail-dependence structure or mixture that no convex combination of
/// canonical copulas can realize.
class InfeasibleStructure : public std::domain_error {
  public:
    explicit InfeasibleStructure(const std::string &what)
        : std::domain_error(what) {}
};

/// Register or grid exceeds the desk-scale limits.
class BudgetExceeded : public std::length_error {
  public:
    explicit BudgetExceeded(const std::string &what)
        : std::length_error(what) {}
};

/// A grid whose axis marginals are not uniform.
class MarginViolation : public std::domain_error {
  public:
    explicit MarginViolation(const std::string &what)
        : std::domain_error(what) {}
};

} // namespace qcopula
