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

#include "mevforge/trace/types.hpp"

#include <cstdint>
#include <map>

namespace mevforge {

enum class PoolKind { V2, V3 };

std::string_view to_string(PoolKind kind);

/// Fee denominator: fees are expressed in parts per million.
inline constexpr std::uint32_t kFeeScale = 1'000'000;

/// Simulated pool. V2 pools use the reserves; V3 pools model a single active
/// liquidity range through `liquidity` and `sqrt_price_x96` (Q64.96).
struct PoolState {
    Address address;
    PoolKind kind = PoolKind::V2;
    TokenId token0;
    TokenId token1;
    Amount reserve0 = 0;
    Amount reserve1 = 0;
    Amount liquidity = 0;
    Amount sqrt_price_x96 = 0;
    std::uint32_t fee_ppm = 3000;

    /// Active-pool invariants: positive reserves (V2) or positive liquidity
    /// and price (V3), distinct tokens, fee below 100%.
    void validate() const;

    bool holds(const TokenId& token) const { return token == token0 || token == token1; }

    friend bool operator==(const PoolState&, const PoolState&) = default;
};

using PoolSet = std::map<Address, PoolState>;

}  // namespace mevforge
