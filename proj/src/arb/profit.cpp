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

#include "mevforge/arb/profit.hpp"

#include "mevforge/core/error.hpp"

namespace mevforge {

ProfitBreakdown attribute_profit(const Transaction& tx, const ArbitrageCycle& cycle,
                                 const ShareAddressSet& share_addresses, const PriceTable* prices) {
    if (cycle.tx_hash != tx.hash) {
        throw ContractViolation("cycle from " + cycle.tx_hash.hex() + " attributed against " + tx.hash.hex());
    }
    cycle.check_invariants();

    ProfitBreakdown out;
    out.base_token = cycle.base_token;
    out.gross = cycle.path.back().amount_out - cycle.path.front().amount_in;

    for (const auto& e : tx.events) {
        if (e.kind == EventKind::Transfer && e.to && share_addresses.contains(*e.to)) {
            out.share += e.amount;
        } else if (e.pool_sink && e.kind == EventKind::Swap) {
            out.share += e.amount_in;
        } else if (e.pool_sink && e.kind == EventKind::Transfer) {
            out.share += e.amount;
        }
    }

    out.gas_cost = tx.gas_cost();
    if (out.gas_cost != 0) {
        if (!prices) throw MissingPriceError(cycle.base_token.symbol);
        Rational gas_usd = Rational(out.gas_cost) * prices->native_price() / Rational(pow10(kNativeDecimals));
        Rational base_units = gas_usd / prices->price(cycle.base_token) * Rational(pow10(cycle.base_token.decimals));
        out.gas_in_base = floor(base_units);
    }
    out.net = out.gross - out.share - out.gas_in_base;
    return out;
}

Rational to_usd(const ProfitBreakdown& breakdown, const PriceTable& prices) {
    return usd_value(breakdown.net, breakdown.base_token, prices);
}

void normalize_usd(ProfitBreakdown& breakdown, const PriceTable& prices) {
    breakdown.usd_value = to_usd(breakdown, prices);
    breakdown.share_usd = usd_value(breakdown.share, breakdown.base_token, prices);
}

std::optional<Rational> profit_to_fee_ratio(const ProfitBreakdown& breakdown) {
    Amount fees = breakdown.gas_in_base + breakdown.share;
    if (fees == 0) return std::nullopt;
    return Rational(breakdown.net, fees);
}

}  // namespace mevforge
