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
#include "qcopula/copula/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace qcopula::copula {

namespace {
long long parse_integer(std::string_view text) {
    long long value = 0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    if (first != last && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("not an integer: " + std::string(text));
    }
    return value;
}
} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const long long den = parse_integer(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        return Rational(parse_integer(text.substr(0, slash)), den);
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto frac = text.substr(dot + 1);
        if (frac.size() > 15) {
            throw std::invalid_argument("too many decimals: " +
                                        std::string(text));
        }
        long long scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        std::string digits(text.substr(0, dot));
        const bool negative = !digits.empty() && digits.front() == '-';
        if (digits.empty() || digits == "-" || digits == "+") {
            digits += "0";
        }
        const long long whole = parse_integer(digits);
        const long long part = frac.empty() ? 0 : parse_integer(frac);
        const long long num = whole * scale + (negative ? -part : part);
        return Rational(num, scale);
    }
    return Rational(parse_integer(text));
}

std::string to_string(const Rational &r) {
    if (r.denominator() == 1) {
        return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/" +
           std::to_string(r.denominator());
}

} // namespace qcopula::copula
