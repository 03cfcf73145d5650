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
#include "qcopula/copula/archimedean.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcopula::copula {

void ArchimedeanParams::validate() const {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("theta must be finite");
    }
    if (family == ArchimedeanFamily::Gumbel && theta < 1.0) {
        throw std::invalid_argument("Gumbel copula needs theta >= 1");
    }
    if (family == ArchimedeanFamily::Clayton && theta <= 0.0) {
        throw std::invalid_argument("Clayton copula needs theta > 0");
    }
}

ArchimedeanFamily parse_family(std::string_view name) {
    if (name == "gumbel") {
        return ArchimedeanFamily::Gumbel;
    }
    if (name == "clayton") {
        return ArchimedeanFamily::Clayton;
    }
    throw std::invalid_argument("unknown Archimedean family: " +
                                std::string(name));
}

namespace {
void check_domain(double x1, double x2) {
    if (!(x1 > 0.0 && x1 <= 1.0 && x2 > 0.0 && x2 <= 1.0)) {
        throw std::domain_error("copula arguments must lie in (0, 1]");
    }
}
} // namespace

double archimedean_cdf(const ArchimedeanParams &params, double x1, double x2) {
    params.validate();
    check_domain(x1, x2);
    const double t = params.theta;
    switch (params.family) {
    case ArchimedeanFamily::Gumbel: {
        const double s = std::pow(-std::log(x1), t) + std::pow(-std::log(x2), t);
        return std::exp(-std::pow(s, 1.0 / t));
    }
    case ArchimedeanFamily::Clayton: {
        const double s = std::pow(x1, -t) + std::pow(x2, -t) - 1.0;
        return std::pow(s, -1.0 / t);
    }
    }
    return 0.0;
}

double archimedean_pdf(const ArchimedeanParams &params, double x1, double x2) {
    params.validate();
    check_domain(x1, x2);
    const double t = params.theta;
    switch (params.family) {
    case ArchimedeanFamily::Gumbel: {
        const double a = -std::log(x1);
        const double b = -std::log(x2);
        const double s = std::pow(a, t) + std::pow(b, t);
        const double r = std::pow(s, 1.0 / t);
        const double c = std::exp(-r);
        return c / (x1 * x2) * std::pow(a * b, t - 1.0) *
               std::pow(s, 2.0 / t - 2.0) * (1.0 + (t - 1.0) / r);
    }
    case ArchimedeanFamily::Clayton: {
        const double s = std::pow(x1, -t) + std::pow(x2, -t) - 1.0;
        return (1.0 + t) * std::pow(x1 * x2, -t - 1.0) *
               std::pow(s, -2.0 - 1.0 / t);
    }
    }
    return 0.0;
}

} // namespace qcopula::copula
