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
#include "qcopula/synth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcopula::synth {

using qsim::Control;
namespace gates = qsim::gates;

void check_prob_vector(std::span<const double> p, std::size_t length) {
    if (p.size() != length) {
        throw std::invalid_argument("probability vector has length " +
                                    std::to_string(p.size()) + ", expected " +
                                    std::to_string(length));
    }
    double total = 0.0;
    for (double v : p) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(
                "probabilities must be finite and nonnegative");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("probabilities sum to " +
                                    std::to_string(total) + ", not 1");
    }
}

double bernoulli_angle(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("bernoulli_angle: p outside [0, 1]");
    }
    return 2.0 * std::asin(std::sqrt(p));
}

Fragment conditional_loader(std::span<const double> pdf,
                            std::span<const int> qubits) {
    const std::size_t m = qubits.size();
    if (m == 0 || m > 30) {
        throw std::invalid_argument("conditional_loader needs 1..30 qubits");
    }
    check_prob_vector(pdf, std::size_t{1} << m);

    // mass[l][prefix] = probability of the l most significant bits == prefix
    std::vector<std::vector<double>> mass(m + 1);
    mass[m].resize(pdf.size());
    for (std::size_t i = 0; i < pdf.size(); ++i) {
        mass[m][i] = pdf[i] < kZeroClamp ? 0.0 : pdf[i];
    }
    for (std::size_t l = m; l-- > 0;) {
        mass[l].resize(std::size_t{1} << l);
        for (std::size_t prefix = 0; prefix < mass[l].size(); ++prefix) {
            mass[l][prefix] =
                mass[l + 1][2 * prefix] + mass[l + 1][2 * prefix + 1];
        }
    }

    Fragment out;
    for (std::size_t l = 0; l < m; ++l) {
        std::vector<std::pair<std::size_t, double>> branches;
        for (std::size_t prefix = 0; prefix < mass[l].size(); ++prefix) {
            const double total = mass[l][prefix];
            if (total <= 0.0) {
                continue;
            }
            const double p_one =
                std::min(1.0, mass[l + 1][2 * prefix + 1] / total);
            branches.emplace_back(prefix, bernoulli_angle(p_one));
        }
        bool shared = !branches.empty();
        for (const auto &[prefix, angle] : branches) {
            shared = shared && angle == branches.front().second;
        }
        const int target = qubits[l];
        if (shared) {
            if (branches.front().second != 0.0) {
                out.push_back(gates::ry(target, branches.front().second));
            }
            continue;
        }
        for (const auto &[prefix, angle] : branches) {
            if (angle == 0.0) {
                continue;
            }
            std::vector<Control> controls;
            for (std::size_t b = 0; b < l; ++b) {
                const bool bit = ((prefix >> (l - 1 - b)) & 1u) != 0;
                controls.push_back({qubits[b], bit});
            }
            out.push_back(gates::controlled(std::move(controls),
                                            {gates::ry(target, angle)}));
        }
    }
    return out;
}

Fragment synth2(std::span<const double> target, int upper, int lower) {
    check_prob_vector(target, 4);
    const int qubits[] = {upper, lower};
    return conditional_loader(target, qubits);
}

Fragment synth3_5(std::span<const double> target, int q0, int q1, int q2) {
    check_prob_vector(target, 5);
    const double top = target[4] < kZeroClamp ? 0.0 : target[4];
    Fragment out;
    if (top > 0.0) {
        out.push_back(gates::ry(q0, bernoulli_angle(std::min(1.0, top))));
    }
    const double rest = 1.0 - top;
    if (rest <= kZeroClamp) {
        return out;
    }
    std::vector<double> lower(4);
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        lower[i] = target[i] < kZeroClamp ? 0.0 : target[i];
        sum += lower[i];
    }
    for (double &v : lower) {
        v /= sum;
    }
    const int pair[] = {q1, q2};
    auto body = conditional_loader(lower, pair);
    if (top == 0.0) {
        return body;
    }
    if (!body.empty()) {
        out.push_back(gates::controlled({{q0, false}}, std::move(body)));
    }
    return out;
}

} // namespace qcopula::synth
