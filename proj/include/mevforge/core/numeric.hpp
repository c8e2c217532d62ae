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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <string>
#include <string_view>

namespace mevforge {

/// Token amounts and other on-chain quantities. Arbitrary precision, signed so
/// that gross/net profits can be negative; non-negativity is enforced where a
/// field requires it.
using Amount = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Exact dollars, shares and milliseconds.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

Amount pow10(unsigned exponent);

/// Parses a non-negative base-10 integer with no sign, exponent or separators.
Amount parse_amount(std::string_view text);

/// Accepts an optional sign followed by an integer, a decimal ("891.78") or a
/// fraction ("1/3").
Rational parse_rational(std::string_view text);

/// Exact rendering: a terminating decimal when one exists ("1783.56", "-0.5",
/// "12"), otherwise "p/q".
std::string format_exact(const Rational& value);

/// Fixed-point rendering at `places` decimals, rounding half away from zero.
std::string format_fixed(const Rational& value, unsigned places);

/// Largest integer not greater than value.
Amount floor(const Rational& value);

/// Smallest integer not less than value.
Amount ceil(const Rational& value);

double to_double(const Rational& value);

}  // namespace mevforge
