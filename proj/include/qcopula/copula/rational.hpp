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
#include <string_view>

#include <boost/rational.hpp>

namespace qcopula::copula {

/// Exact weights for calibrations whose inputs are rational (e.g. 7/16).
using Rational = boost::rational<long long>;

/// Accepts "p/q", an integer, or a decimal literal ("0.25" becomes 1/4).
Rational parse_rational(std::string_view text);

inline double to_double(const Rational &r) {
    return boost::rational_cast<double>(r);
}
inline double to_double(double d) { return d; }

std::string to_string(const Rational &r);

} // namespace qcopula::copula
