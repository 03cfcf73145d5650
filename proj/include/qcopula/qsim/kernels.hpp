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

#include <complex>
#include <cstdint>
#include <span>

/// Statevector update kernels. `serial` is the reference implementation kept
/// for testing; `parallel` splits the same loops across OpenMP threads. Both
/// namespaces expose identical signatures; the gate kernels agree bit for
/// bit, reductions only up to summation order.
namespace qcopula::qsim::kernels {

using Amplitude = std::complex<double>;

struct Mat2 {
    Amplitude m00, m01, m10, m11;
};

/// Restricts an update to basis states with `(index & mask) == value`.
struct ControlMask {
    std::uint64_t mask = 0;
    std::uint64_t value = 0;
};

/// Below this many amplitude pairs the parallel kernels run single-threaded.
inline constexpr std::uint64_t kParallelThreshold = 1u << 12;

namespace serial {
void apply_1q(std::span<Amplitude> amps, int target, const Mat2 &m,
              ControlMask ctrl);
void apply_x(std::span<Amplitude> amps, int target, ControlMask ctrl);
void apply_swap(std::span<Amplitude> amps, int a, int b, ControlMask ctrl);
void apply_phase(std::span<Amplitude> amps, int target, Amplitude phase,
                 ControlMask ctrl);
double norm_squared(std::span<const Amplitude> amps);
} // namespace serial

namespace parallel {
void apply_1q(std::span<Amplitude> amps, int target, const Mat2 &m,
              ControlMask ctrl);
void apply_x(std::span<Amplitude> amps, int target, ControlMask ctrl);
void apply_swap(std::span<Amplitude> amps, int a, int b, ControlMask ctrl);
void apply_phase(std::span<Amplitude> amps, int target, Amplitude phase,
                 ControlMask ctrl);
double norm_squared(std::span<const Amplitude> amps);
} // namespace parallel

} // namespace qcopula::qsim::kernels
