// Copyright 2026 The mevforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mevforge/core/numeric.hpp"

#include "mevforge/core/error.hpp"

#include <algorithm>
#include <cctype>

namespace mevforge {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

/// cpp_int reads a leading 0 as an octal prefix, so strip zeros first.
Amount decimal(std::string_view digits) {
    auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return 0;
    return Amount(std::string(digits.substr(first)));
}

}  // namespace

Amount pow10(unsigned exponent) {
    Amount result = 1;
    for (unsigned i = 0; i < exponent; ++i) result *= 10;
    return result;
}

Amount parse_amount(std::string_view text) {
    if (!all_digits(text)) throw ContractViolation("not a non-negative integer: '" + std::string(text) + "'");
    return decimal(text);
}

Rational parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw ContractViolation("malformed fraction: '" + std::string(text) + "'");
        Amount d = decimal(den);
        if (d == 0) throw ContractViolation("zero denominator: '" + std::string(text) + "'");
        value = Rational(decimal(num), d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
            throw ContractViolation("malformed decimal: '" + std::string(text) + "'");
        }
        Amount w = whole.empty() ? Amount(0) : decimal(whole);
        Amount f = decimal(frac);
        Amount scale = pow10(static_cast<unsigned>(frac.size()));
        value = Rational(w * scale + f, scale);
    } else {
        if (!all_digits(text)) throw ContractViolation("malformed number: '" + std::string(text) + "'");
        value = Rational(decimal(text));
    }
    return negative ? Rational(-value) : value;
}

Amount floor(const Rational& value) {
    Amount num = boost::multiprecision::numerator(value);
    Amount den = boost::multiprecision::denominator(value);
    Amount q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

Amount ceil(const Rational& value) {
    return -floor(Rational(-value));
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

std::string format_exact(const Rational& value) {
    Amount den = boost::multiprecision::denominator(value);
    Amount d = den;
    unsigned twos = 0;
    unsigned fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) {
        return boost::multiprecision::numerator(value).str() + "/" + den.str();
    }
    return format_fixed(value, std::max(twos, fives));
}

std::string format_fixed(const Rational& value, unsigned places) {
    bool negative = value < 0;
    Rational magnitude = negative ? Rational(-value) : value;
    Amount scale = pow10(places);
    // Half away from zero on the magnitude.
    Amount scaled = floor(Rational(magnitude * scale + Rational(1, 2)));
    std::string digits = scaled.str();
    if (places > 0) {
        if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
        digits.insert(digits.size() - places, ".");
    }
    if (negative && scaled != 0) digits.insert(0, "-");
    return digits;
}

}  // namespace mevforge
