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

#include "mevforge/amm/pool.hpp"

namespace mevforge {

struct V2SwapResult {
    Amount amount_out;
    PoolState pool;
};

/// Constant-product exact-input swap:
///   out = ⌊in·(S−fee)·R_out / (R_in·S + in·(S−fee))⌋,  S = 10^6.
/// Throws ContractViolation when token_in is not in the pool or amount_in is
/// not positive, DustError when the output rounds to zero.
V2SwapResult swap_v2(const PoolState& pool, const TokenId& token_in, const Amount& amount_in);

/// 2^96.
const Amount& q96();

struct V3SwapResult {
    Amount amount_out;
    /// Input actually taken by the pool, fee included.
    Amount amount_consumed;
    /// Input left over because the price limit stopped the swap.
    Amount amount_remaining;
    PoolState pool;
};

/// Most permissive valid price limit for the direction.
Amount permissive_price_limit(bool zero_for_one);

/// Exact-input swap against one active liquidity range. `zero_for_one` sells
/// token0 and moves the price down; the other direction moves it up. The fee
/// is taken from the input, the price follows L = Δy/Δ√P, and a swap that
/// would cross `sqrt_price_limit_x96` stops at the limit. Throws
/// InactivePoolError on zero liquidity and ContractViolation when the limit
/// lies on the wrong side of the current price.
V3SwapResult swap_v3(const PoolState& pool, bool zero_for_one, const Amount& amount_in,
                     const Amount& sqrt_price_limit_x96);

}  // namespace mevforge
