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

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcopula/copula/grid.hpp"
#include "qcopula/copula/partition.hpp"
#include "qcopula/copula/rational.hpp"
#include "qcopula/error.hpp"

namespace qcopula::copula {

/// Convex combination of canonical copulas: each (signed) set partition of
/// the n variables carries a nonnegative weight, weights summing to one.
/// `Scalar` is double or Rational.
template <class Scalar> struct BasicMb11Spec {
    int n = 0;
    std::vector<std::pair<SetPartition, Scalar>> entries;

    /// Throws std::invalid_argument on negative weights, a total other than
    /// one (exact for Rational, 1e-12 for double), arity mismatches or
    /// duplicate partitions.
    void validate() const;

    Scalar weight(const SetPartition &p) const {
        for (const auto &[part, w] : entries) {
            if (part == p) {
                return w;
            }
        }
        return Scalar(0);
    }
    bool is_signed() const {
        return std::any_of(entries.begin(), entries.end(),
                           [](const auto &e) { return e.first.is_signed(); });
    }
};

using Mb11Spec = BasicMb11Spec<double>;
using ExactMb11Spec = BasicMb11Spec<Rational>;

Mb11Spec to_double(const ExactMb11Spec &spec);

/// Pairwise tail-dependence matrix with unit diagonal, plus the trivariate
/// coefficient of variables 1, 2, 3 when n >= 3.
template <class Scalar> struct BasicTailDependence {
    std::vector<std::vector<Scalar>> lambda2;
    std::optional<Scalar> lambda123;

    int dimension() const { return static_cast<int>(lambda2.size()); }
    /// Throws std::invalid_argument unless square, symmetric, unit diagonal
    /// and entries within [0, 1].
    void validate() const;
};

using TailDependence = BasicTailDependence<double>;
using ExactTailDependence = BasicTailDependence<Rational>;

/// Weighted sum of canonical grids. Validates the spec first.
CopulaGrid mixture_grid(const Mb11Spec &spec, int k);
CopulaGrid mixture_grid(const ExactMb11Spec &spec, int k);

/// alpha M2 + (1 - alpha) Pi2; negative alpha moves the weight onto W2.
template <class Scalar> BasicMb11Spec<Scalar> b11_spec(Scalar alpha);
/// alpha M2 + beta W2 + (1 - alpha - beta) Pi2.
template <class Scalar>
BasicMb11Spec<Scalar> frechet2_spec(Scalar alpha, Scalar beta);

/// Trivariate calibration from (lambda12, lambda13, lambda23, lambda123).
/// Entries come back in the order C111, C112, C121, C122, C123. Throws
/// InfeasibleStructure if any weight would be negative.
template <class Scalar>
BasicMb11Spec<Scalar> mb11_weights_from_taildep(Scalar l12, Scalar l13,
                                                Scalar l23, Scalar l123);

/// lambda_ij is the total weight of partitions that move i and j together;
/// lambda123 the weight of those moving 1, 2 and 3 together.
template <class Scalar>
BasicTailDependence<Scalar> taildep_from_weights(const BasicMb11Spec<Scalar> &spec);

/// Realizes a bivariate structure with pair copulas: every i < j with
/// lambda_ij > 0 gets the partition {i, j} + singletons at weight lambda_ij,
/// the rest goes to independence. Feasible iff the off-diagonal lower
/// triangle sums to at most 1 (matrix total at most n + 2); otherwise throws
/// InfeasibleStructure.
template <class Scalar>
BasicMb11Spec<Scalar>
mb11_from_bivariate_structure(const BasicTailDependence<Scalar> &structure);

// ---------------------------------------------------------------------------

namespace detail {
inline bool is_zero_sum_error(double total) { return std::abs(total - 1.0) > 1e-12; }
inline bool is_zero_sum_error(const Rational &total) { return total != Rational(1); }
inline std::string show(double d) { return std::to_string(d); }
inline std::string show(const Rational &r) { return to_string(r); }
} // namespace detail

template <class Scalar> void BasicMb11Spec<Scalar>::validate() const {
    if (n < 1) {
        throw std::invalid_argument("mixture dimension must be positive");
    }
    Scalar total(0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &[part, w] = entries[i];
        if (part.size() != n) {
            throw std::invalid_argument("partition " + part.to_string() +
                                        " does not have " + std::to_string(n) +
                                        " elements");
        }
        if (w < Scalar(0)) {
            throw std::invalid_argument("negative mixture weight " +
                                        detail::show(w) + " on " +
                                        part.to_string());
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (entries[j].first == part) {
                throw std::invalid_argument("duplicate partition " +
                                            part.to_string());
            }
        }
        total += w;
    }
    if (detail::is_zero_sum_error(total)) {
        throw std::invalid_argument("mixture weights sum to " +
                                    detail::show(total) + ", not 1");
    }
}

template <class Scalar> void BasicTailDependence<Scalar>::validate() const {
    const auto n = lambda2.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (lambda2[i].size() != n) {
            throw std::invalid_argument("tail dependence matrix is not square");
        }
        if (lambda2[i][i] != Scalar(1)) {
            throw std::invalid_argument("tail dependence diagonal must be 1");
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar &v = lambda2[i][j];
            if (v < Scalar(0) || Scalar(1) < v) {
                throw std::invalid_argument("tail dependence entry outside [0, 1]");
            }
            if (v != lambda2[j][i]) {
                throw std::invalid_argument("tail dependence matrix is not symmetric");
            }
        }
    }
}

template <class Scalar> BasicMb11Spec<Scalar> b11_spec(Scalar alpha) {
    BasicMb11Spec<Scalar> spec{2, {}};
    if (alpha < Scalar(0)) {
        spec.entries.emplace_back(SetPartition({{1, -2}}), Scalar(0) - alpha);
        spec.entries.emplace_back(SetPartition::independence(2),
                                  Scalar(1) + alpha);
    } else {
        spec.entries.emplace_back(SetPartition::comonotone(2), alpha);
        spec.entries.emplace_back(SetPartition::independence(2),
                                  Scalar(1) - alpha);
    }
    spec.validate();
    return spec;
}

template <class Scalar>
BasicMb11Spec<Scalar> frechet2_spec(Scalar alpha, Scalar beta) {
    BasicMb11Spec<Scalar> spec{2, {}};
    spec.entries.emplace_back(SetPartition::comonotone(2), alpha);
    spec.entries.emplace_back(SetPartition({{1, -2}}), beta);
    spec.entries.emplace_back(SetPartition::independence(2),
                              Scalar(1) - alpha - beta);
    spec.validate();
    return spec;
}

template <class Scalar>
BasicMb11Spec<Scalar> mb11_weights_from_taildep(Scalar l12, Scalar l13,
                                                Scalar l23, Scalar l123) {
    for (const Scalar &v : {l12, l13, l23, l123}) {
        if (v < Scalar(0) || Scalar(1) < v) {
            throw std::invalid_argument("tail coefficients must lie in [0, 1]");
        }
    }
    const auto parts = set_partitions(3, false);
    const Scalar weights[] = {
        l123,
        l12 - l123,
        l13 - l123,
        l23 - l123,
        Scalar(1) - l12 - l13 - l23 + Scalar(2) * l123,
    };
    BasicMb11Spec<Scalar> spec{3, {}};
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (weights[i] < Scalar(0)) {
            throw InfeasibleStructure(
                "tail dependence structure is infeasible: weight of " +
                parts[i].to_string() + " would be " + detail::show(weights[i]));
        }
        spec.entries.emplace_back(parts[i], weights[i]);
    }
    return spec;
}

template <class Scalar>
BasicTailDependence<Scalar>
taildep_from_weights(const BasicMb11Spec<Scalar> &spec) {
    spec.validate();
    const auto n = static_cast<std::size_t>(spec.n);
    BasicTailDependence<Scalar> out;
    out.lambda2.assign(n, std::vector<Scalar>(n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) {
        out.lambda2[i][i] = Scalar(1);
    }
    for (const auto &[part, w] : spec.entries) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (part.comonotone(static_cast<int>(i), static_cast<int>(j))) {
                    out.lambda2[i][j] += w;
                    out.lambda2[j][i] += w;
                }
            }
        }
    }
    if (n >= 3) {
        Scalar l123(0);
        for (const auto &[part, w] : spec.entries) {
            if (part.comonotone(0, 1) && part.comonotone(0, 2)) {
                l123 += w;
            }
        }
        out.lambda123 = l123;
    }
    return out;
}

template <class Scalar>
BasicMb11Spec<Scalar>
mb11_from_bivariate_structure(const BasicTailDependence<Scalar> &structure) {
    structure.validate();
    const int n = structure.dimension();
    if (n < 2) {
        throw std::invalid_argument("bivariate structure needs n >= 2");
    }
    BasicMb11Spec<Scalar> spec{n, {}};
    Scalar used(0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Scalar &w = structure.lambda2[static_cast<std::size_t>(j)]
                                               [static_cast<std::size_t>(i)];
            if (w == Scalar(0)) {
                continue;
            }
            std::vector<SetPartition::Block> blocks{{i + 1, j + 1}};
            for (int v = 0; v < n; ++v) {
                if (v != i && v != j) {
                    blocks.push_back({v + 1});
                }
            }
            spec.entries.emplace_back(SetPartition(blocks), w);
            used += w;
        }
    }
    if (Scalar(1) < used) {
        throw InfeasibleStructure(
            "off-diagonal tail dependence sums to " + detail::show(used) +
            " > 1; pair-copula mixtures cannot realize it");
    }
    spec.entries.emplace_back(SetPartition::independence(n), Scalar(1) - used);
    return spec;
}

} // namespace qcopula::copula
