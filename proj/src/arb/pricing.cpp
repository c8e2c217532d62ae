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

#include "mevforge/arb/pricing.hpp"

#include "mevforge/core/error.hpp"

namespace mevforge {

PriceTable::PriceTable(std::map<std::string, Rational> prices) {
    for (const auto& [symbol, usd] : prices) set(symbol, usd);
}

void PriceTable::set(const std::string& symbol, const Rational& usd) {
    if (usd <= 0) throw ConfigError("price for " + symbol + " must be positive");
    prices_[symbol] = usd;
}

const Rational& PriceTable::price(const std::string& symbol) const {
    auto it = prices_.find(symbol);
    if (it == prices_.end()) throw MissingPriceError(symbol);
    return it->second;
}

const Rational& PriceTable::native_price() const {
    if (auto it = prices_.find("BNB"); it != prices_.end()) return it->second;
    return price("WBNB");
}

PriceTable PriceTable::reference() {
    return PriceTable({
        {"WBNB", Rational(89178, 100)},
        {"USDT", Rational(1)},
        {"USD1", Rational(1)},
        {"USDC", Rational(1)},
    });
}

Rational usd_value(const Amount& base_units, const TokenId& token, const PriceTable& prices) {
    return Rational(base_units) * prices.price(token) / Rational(pow10(token.decimals));
}

}  // namespace mevforge
