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

#include "mevforge/core/numeric.hpp"
#include "mevforge/trace/types.hpp"

#include <map>
#include <string>

namespace mevforge {

/// Fixed USD reference prices keyed by token symbol.
class PriceTable {
  public:
    PriceTable() = default;
    explicit PriceTable(std::map<std::string, Rational> prices);

    /// Throws ConfigError on a non-positive price.
    void set(const std::string& symbol, const Rational& usd);

    /// Throws MissingPriceError when the symbol has no entry.
    const Rational& price(const std::string& symbol) const;
    const Rational& price(const TokenId& token) const { return price(token.symbol); }

    bool contains(const std::string& symbol) const { return prices_.count(symbol) > 0; }

    /// USD price of the native gas coin: "BNB", falling back to "WBNB" (the
    /// wrapper unwraps 1:1).
    const Rational& native_price() const;

    const std::map<std::string, Rational>& entries() const noexcept { return prices_; }

    /// WBNB at 891.78 USD plus unit-priced stablecoins.
    static PriceTable reference();

  private:
    std::map<std::string, Rational> prices_;
};

/// Decimal places of the native gas coin.
inline constexpr unsigned kNativeDecimals = 18;

/// Dollar value of `base_units` of `token`.
Rational usd_value(const Amount& base_units, const TokenId& token, const PriceTable& prices);

}  // namespace mevforge
