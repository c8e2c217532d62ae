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

#include "mevforge/arb/cycle.hpp"
#include "mevforge/arb/pricing.hpp"

#include <optional>
#include <set>

namespace mevforge {

/// Redistribution endpoints counted as share profit. Defaults to the
/// validator-income address.
class ShareAddressSet {
  public:
    ShareAddressSet() : addresses_{validator_income_address()} {}
    explicit ShareAddressSet(std::set<Address> addresses) : addresses_(std::move(addresses)) {}

    bool contains(const Address& a) const { return addresses_.count(a) > 0; }
    const std::set<Address>& addresses() const noexcept { return addresses_; }

  private:
    std::set<Address> addresses_;
};

/// Profit of one cycle in base-token units. Gas is kept in wei and converted
/// into base units for the net figure, so net + share + gas_in_base == gross
/// holds exactly.
struct ProfitBreakdown {
    TokenId base_token;
    Amount gross = 0;
    Amount share = 0;
    Amount gas_cost = 0;
    Amount gas_in_base = 0;
    Amount net = 0;
    /// Filled by normalize_usd.
    std::optional<Rational> usd_value;
    std::optional<Rational> share_usd;
};

/// Gross from the first hop's input and last hop's output; share from
/// transfers into `share_addresses` plus pool-sink routed amounts; gas from
/// the receipt. `prices` is only consulted when gas is non-zero, to convert
/// wei into base-token units (floored). Throws ContractViolation when the
/// cycle was not extracted from `tx`, MissingPriceError when gas needs a
/// price that is absent.
ProfitBreakdown attribute_profit(const Transaction& tx, const ArbitrageCycle& cycle,
                                 const ShareAddressSet& share_addresses, const PriceTable* prices = nullptr);

/// net × price(base) / 10^decimals.
Rational to_usd(const ProfitBreakdown& breakdown, const PriceTable& prices);

/// Sets usd_value and share_usd.
void normalize_usd(ProfitBreakdown& breakdown, const PriceTable& prices);

/// net / (gas_in_base + share); absent when there were no deductions.
std::optional<Rational> profit_to_fee_ratio(const ProfitBreakdown& breakdown);

}  // namespace mevforge
