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

#include "mevforge/amm/swap.hpp"

#include "mevforge/core/error.hpp"

namespace mevforge {

std::string_view to_string(PoolKind kind) {
    return kind == PoolKind::V2 ? "v2" : "v3";
}

void PoolState::validate() const {
    token0.validate();
    token1.validate();
    if (token0 == token1) throw ContractViolation("pool " + address.hex() + " pairs a token with itself");
    if (fee_ppm >= kFeeScale) throw ContractViolation("pool " + address.hex() + " fee must be below 100%");
    if (kind == PoolKind::V2) {
        if (reserve0 <= 0 || reserve1 <= 0) throw ContractViolation("v2 pool " + address.hex() + " has empty reserves");
    } else {
        if (liquidity <= 0) throw InactivePoolError("v3 pool " + address.hex() + " has no liquidity");
        if (sqrt_price_x96 <= 0) throw ContractViolation("v3 pool " + address.hex() + " has no price");
    }
}

namespace {

Amount ceil_div(const Amount& num, const Amount& den) {
    Amount q = num / den;
    if (q * den != num) q += 1;
    return q;
}

}  // namespace

V2SwapResult swap_v2(const PoolState& pool, const TokenId& token_in, const Amount& amount_in) {
    if (pool.kind != PoolKind::V2) throw ContractViolation("swap_v2 on a v3 pool");
    if (!pool.holds(token_in)) throw ContractViolation(token_in.symbol + " is not traded by pool " + pool.address.hex());
    if (amount_in <= 0) throw ContractViolation("swap input must be positive");
    if (pool.reserve0 <= 0 || pool.reserve1 <= 0) throw ContractViolation("v2 pool has empty reserves");

    const bool zero_in = token_in == pool.token0;
    const Amount& reserve_in = zero_in ? pool.reserve0 : pool.reserve1;
    const Amount& reserve_out = zero_in ? pool.reserve1 : pool.reserve0;

    Amount in_with_fee = amount_in * (kFeeScale - pool.fee_ppm);
    Amount out = in_with_fee * reserve_out / (reserve_in * kFeeScale + in_with_fee);
    if (out == 0) throw DustError("swap output rounds to zero");

    V2SwapResult result{out, pool};
    if (zero_in) {
        result.pool.reserve0 += amount_in;
        result.pool.reserve1 -= out;
    } else {
        result.pool.reserve1 += amount_in;
        result.pool.reserve0 -= out;
    }
    return result;
}

const Amount& q96() {
    static const Amount value = Amount(1) << 96;
    return value;
}

Amount permissive_price_limit(bool zero_for_one) {
    return zero_for_one ? Amount(1) : Amount((Amount(1) << 160) - 1);
}

V3SwapResult swap_v3(const PoolState& pool, bool zero_for_one, const Amount& amount_in,
                     const Amount& sqrt_price_limit_x96) {
    if (pool.kind != PoolKind::V3) throw ContractViolation("swap_v3 on a v2 pool");
    if (pool.liquidity <= 0) throw InactivePoolError("v3 pool " + pool.address.hex() + " has no liquidity");
    if (amount_in <= 0) throw ContractViolation("swap input must be positive");
    const Amount& price = pool.sqrt_price_x96;
    const Amount& limit = sqrt_price_limit_x96;
    if (zero_for_one ? (limit > price || limit <= 0) : (limit < price)) {
        throw ContractViolation("price limit on the wrong side of the current price");
    }

    const Amount& L = pool.liquidity;
    const Amount& Q = q96();
    const Amount fee_keep = kFeeScale - pool.fee_ppm;
    const Amount net_in = amount_in * fee_keep / kFeeScale;

    Amount next = 0;
    Amount consumed = amount_in;
    if (zero_for_one) {
        // √P' = L·√P / (L + Δx·√P), rounded up so the pool never over-pays.
        Amount numerator = L * Q * price;
        next = ceil_div(numerator, L * Q + net_in * price);
        if (next < limit) {
            next = limit;
            Amount needed = ceil_div(L * Q * (price - limit), price * limit);
            consumed = ceil_div(needed * kFeeScale, fee_keep);
        }
    } else {
        // √P' = √P + Δy/L
        next = price + net_in * Q / L;
        if (next > limit) {
            next = limit;
            Amount needed = ceil_div(L * (limit - price), Q);
            consumed = ceil_div(needed * kFeeScale, fee_keep);
        }
    }
    if (consumed > amount_in) consumed = amount_in;

    Amount out = zero_for_one ? L * (price - next) / Q : L * Q * (next - price) / (next * price);

    V3SwapResult result{out, consumed, amount_in - consumed, pool};
    result.pool.sqrt_price_x96 = next;
    return result;
}

}  // namespace mevforge
