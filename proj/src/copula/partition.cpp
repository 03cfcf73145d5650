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
#include "qcopula/copula/partition.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace qcopula::copula {

SetPartition::SetPartition(int n,
                           const std::array<std::uint8_t, kMaxElements> &labels,
                           std::uint16_t negated)
    : n_(static_cast<std::uint8_t>(n)), labels_(labels), negated_(negated) {}

SetPartition::SetPartition(const std::vector<Block> &blocks) {
    std::vector<Block> sorted;
    int n = 0;
    for (Block b : blocks) {
        if (b.empty()) {
            throw std::invalid_argument("empty block in set partition");
        }
        std::sort(b.begin(), b.end(), [](int a, int c) {
            return std::abs(a) < std::abs(c);
        });
        if (b.front() < 0) {
            for (int &m : b) {
                m = -m;
            }
        }
        for (int m : b) {
            if (m == 0) {
                throw std::invalid_argument("set partition members are 1-based");
            }
            n = std::max(n, std::abs(m));
        }
        sorted.push_back(std::move(b));
    }
    if (n > kMaxElements) {
        throw std::out_of_range("set partition larger than 12 elements");
    }
    std::sort(sorted.begin(), sorted.end(), [](const Block &a, const Block &b) {
        return a.front() < b.front();
    });
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    n_ = static_cast<std::uint8_t>(n);
    for (std::size_t label = 0; label < sorted.size(); ++label) {
        for (int m : sorted[label]) {
            const auto var = static_cast<std::size_t>(std::abs(m) - 1);
            if (seen[var]++ != 0) {
                throw std::invalid_argument("element " +
                                            std::to_string(std::abs(m)) +
                                            " appears twice");
            }
            labels_[var] = static_cast<std::uint8_t>(label);
            if (m < 0) {
                negated_ |= static_cast<std::uint16_t>(1u << var);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw std::invalid_argument("set partition does not cover {1..n}");
    }
}

SetPartition SetPartition::comonotone(int n) {
    Block b;
    for (int i = 1; i <= n; ++i) {
        b.push_back(i);
    }
    return SetPartition({b});
}

SetPartition SetPartition::independence(int n) {
    std::vector<Block> blocks;
    for (int i = 1; i <= n; ++i) {
        blocks.push_back({i});
    }
    return SetPartition(blocks);
}

SetPartition SetPartition::parse(std::string_view text) {
    std::vector<Block> blocks;
    Block current;
    int depth = 0;
    std::string number;
    auto flush = [&] {
        if (!number.empty()) {
            current.push_back(std::stoi(number));
            number.clear();
        }
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        if (c == '{') {
            ++depth;
            if (depth > 2) {
                throw std::invalid_argument("malformed set partition");
            }
        } else if (c == '}') {
            flush();
            if (depth == 2) {
                blocks.push_back(current);
                current.clear();
            }
            --depth;
        } else if (c == ',') {
            flush();
        } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            number += c;
        } else {
            throw std::invalid_argument("unexpected character in partition");
        }
    }
    if (depth != 0 || blocks.empty()) {
        throw std::invalid_argument("malformed set partition: " +
                                    std::string(text));
    }
    return SetPartition(blocks);
}

int SetPartition::num_blocks() const {
    int most = -1;
    for (int i = 0; i < n_; ++i) {
        most = std::max(most, static_cast<int>(labels_[static_cast<std::size_t>(i)]));
    }
    return most + 1;
}

bool SetPartition::comonotone(int i, int j) const {
    return block_of(i) == block_of(j) && negated(i) == negated(j);
}

std::vector<SetPartition::Block> SetPartition::blocks() const {
    std::vector<Block> out(static_cast<std::size_t>(num_blocks()));
    for (int i = 0; i < n_; ++i) {
        out[static_cast<std::size_t>(block_of(i))].push_back(negated(i) ? -(i + 1)
                                                                   : i + 1);
    }
    return out;
}

std::string SetPartition::to_string() const {
    std::string s = "{";
    const auto bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
        s += b ? ",{" : "{";
        for (std::size_t m = 0; m < bs[b].size(); ++m) {
            s += (m ? "," : "") + std::to_string(bs[b][m]);
        }
        s += "}";
    }
    return s + "}";
}

void for_each_set_partition(
    int n, bool include_signed,
    const std::function<void(const SetPartition &)> &visit) {
    const int cap =
        include_signed ? kMaxSignedPartitionSize : kMaxUnsignedPartitionSize;
    if (n < 1 || n > cap) {
        throw std::out_of_range("set partitions supported for 1 <= n <= " +
                                std::to_string(cap));
    }
    std::vector<std::array<std::uint8_t, SetPartition::kMaxElements>> all;
    std::array<std::uint8_t, SetPartition::kMaxElements> rgs{};
    // maxima[i] = max(rgs[0..i])
    std::array<int, SetPartition::kMaxElements> maxima{};

    // Restricted growth strings in lexicographic order.
    auto emit = [&](const auto &labels) {
        if (include_signed) {
            all.push_back(labels);
        }
        visit(SetPartition(n, labels, 0));
    };
    emit(rgs);
    while (true) {
        int i = n - 1;
        while (i > 0 && rgs[static_cast<std::size_t>(i)] >
                            maxima[static_cast<std::size_t>(i - 1)]) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++rgs[static_cast<std::size_t>(i)];
        maxima[static_cast<std::size_t>(i)] =
            std::max(maxima[static_cast<std::size_t>(i - 1)],
                     static_cast<int>(rgs[static_cast<std::size_t>(i)]));
        for (int j = i + 1; j < n; ++j) {
            rgs[static_cast<std::size_t>(j)] = 0;
            maxima[static_cast<std::size_t>(j)] = maxima[static_cast<std::size_t>(i)];
        }
        emit(rgs);
    }
    if (!include_signed) {
        return;
    }
    for (const auto &labels : all) {
        // members that may carry a sign: every non-lowest member of a block
        std::vector<int> signable;
        std::array<bool, SetPartition::kMaxElements> opened{};
        for (int v = 0; v < n; ++v) {
            auto &o = opened[labels[static_cast<std::size_t>(v)]];
            if (o) {
                signable.push_back(v);
            }
            o = true;
        }
        const std::uint32_t variants = 1u << signable.size();
        for (std::uint32_t mask = 1; mask < variants; ++mask) {
            std::uint16_t negated = 0;
            for (std::size_t b = 0; b < signable.size(); ++b) {
                if ((mask >> b) & 1u) {
                    negated |= static_cast<std::uint16_t>(1u << signable[b]);
                }
            }
            visit(SetPartition(n, labels, negated));
        }
    }
}

std::vector<SetPartition> set_partitions(int n, bool include_signed) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, include_signed,
                           [&](const SetPartition &p) { out.push_back(p); });
    return out;
}

std::uint64_t bell_number(int n) {
    if (n < 0 || n > 25) {
        throw std::out_of_range("bell_number supports 0 <= n <= 25");
    }
    // Bell triangle
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row) {
            next.push_back(next.back() + v);
        }
        row = std::move(next);
    }
    return row.front();
}

} // namespace qcopula::copula
