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

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace qcopula::copula {

/**
 * Set partition of the copula variables {1..n}, optionally signed.
 *
 * Stored as a restricted growth string (block label per variable, labels
 * appearing in first-use order) plus a mask of countermonotone members. A
 * block's lowest member is always '+'; a '-' member takes the bitwise
 * complement of its block's seed. Variables are 0-based in the API and
 * printed 1-based.
 */
class SetPartition {
  public:
    static constexpr int kMaxElements = 12;
    using Block = std::vector<int>; ///< signed, 1-based members

    SetPartition() = default;
    /// Builds from signed 1-based blocks, e.g. {{1, -2}, {3}}. A block whose
    /// lowest member is negative is flipped as a whole.
    explicit SetPartition(const std::vector<Block> &blocks);
    /// Single block {1..n}.
    static SetPartition comonotone(int n);
    /// n singletons.
    static SetPartition independence(int n);
    /// Parses "{{1,-2},{3}}".
    static SetPartition parse(std::string_view text);

    int size() const { return n_; }
    int num_blocks() const;
    int block_of(int var) const { return labels_[static_cast<std::size_t>(var)]; }
    bool negated(int var) const { return (negated_ >> var) & 1u; }
    bool is_signed() const { return negated_ != 0; }
    /// Same block and same sign: the pair moves together.
    bool comonotone(int i, int j) const;
    std::vector<Block> blocks() const;
    std::string to_string() const;

    auto operator<=>(const SetPartition &) const = default;

  private:
    SetPartition(int n, const std::array<std::uint8_t, kMaxElements> &labels,
                 std::uint16_t negated);
    friend void for_each_set_partition(
        int, bool, const std::function<void(const SetPartition &)> &);

    std::uint8_t n_ = 0;
    std::array<std::uint8_t, kMaxElements> labels_{};
    std::uint16_t negated_ = 0;
};

inline constexpr int kMaxUnsignedPartitionSize = 12;
inline constexpr int kMaxSignedPartitionSize = 8;

/// Visits unsigned partitions in restricted-growth-string order; with
/// `include_signed`, then every countermonotone variant (per partition, sign
/// masks ascending). For n = 3 this reproduces the ordering C111, C112, C121,
/// C122, C123 followed by the six signed partitions.
void for_each_set_partition(
    int n, bool include_signed,
    const std::function<void(const SetPartition &)> &visit);

/// Throws std::out_of_range for n outside [1, 12] (unsigned) or [1, 8]
/// (signed).
std::vector<SetPartition> set_partitions(int n, bool include_signed);

/// Bell numbers, B(0) = 1.
std::uint64_t bell_number(int n);

} // namespace qcopula::copula
