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

#include <string_view>

namespace qcopula::copula {

enum class ArchimedeanFamily { Gumbel, Clayton };

struct ArchimedeanParams {
    ArchimedeanFamily family = ArchimedeanFamily::Gumbel;
    double theta = 1.0;

    /// Gumbel needs theta >= 1, Clayton theta > 0.
    void validate() const;
};

ArchimedeanFamily parse_family(std::string_view name);

/// Closed-form cdf on (0, 1]^2:
///   Gumbel  exp(-((-ln x1)^theta + (-ln x2)^theta)^(1/theta))
///   Clayton (x1^-theta + x2^-theta - 1)^(-1/theta)
/// Throws std::domain_error outside the unit square.
double archimedean_cdf(const ArchimedeanParams &params, double x1, double x2);

/// Density of the same copula, for quadrature checks.
double archimedean_pdf(const ArchimedeanParams &params, double x1, double x2);

/// Frechet-Hoeffding bounds and the product copula, as cdfs.
inline double comonotone_cdf(double x1, double x2) {
    return x1 < x2 ? x1 : x2;
}
inline double countermonotone_cdf(double x1, double x2) {
    const double v = x1 + x2 - 1.0;
    return v > 0.0 ? v : 0.0;
}
inline double independence_cdf(double x1, double x2) { return x1 * x2; }

} // namespace qcopula::copula
