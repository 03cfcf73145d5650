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
#include "qcopula/copula/mb11.hpp"

namespace qcopula::copula {

Mb11Spec to_double(const ExactMb11Spec &spec) {
    Mb11Spec out{spec.n, {}};
    for (const auto &[part, w] : spec.entries) {
        out.entries.emplace_back(part, to_double(w));
    }
    return out;
}

CopulaGrid mixture_grid(const Mb11Spec &spec, int k) {
    spec.validate();
    CopulaGrid grid(spec.n, k);
    for (const auto &[part, w] : spec.entries) {
        if (w == 0.0) {
            continue;
        }
        CopulaGrid component = canonical_grid(part, k);
        component *= w;
        grid += component;
    }
    return grid;
}

CopulaGrid mixture_grid(const ExactMb11Spec &spec, int k) {
    spec.validate();
    return mixture_grid(to_double(spec), k);
}

} // namespace qcopula::copula
