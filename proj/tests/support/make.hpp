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

// Small constructors for hand-written test transactions and pools.

#include "mevforge/amm/pool.hpp"
#include "mevforge/ingest/fixtures.hpp"
#include "mevforge/trace/types.hpp"

#include <string>

namespace make {

using namespace mevforge;

inline const TokenId& tok(const std::string& symbol) {
    return ingest::bsc_token(symbol);
}

inline Address addr(unsigned n) {
    std::array<std::uint8_t, 20> b{};
    b[0] = 0xaa;
    b[18] = static_cast<std::uint8_t>(n >> 8);
    b[19] = static_cast<std::uint8_t>(n);
    return Address(b);
}

inline Hash32 hash(unsigned n) {
    std::array<std::uint8_t, 32> b{};
    b[0] = 0xcc;
    b[30] = static_cast<std::uint8_t>(n >> 8);
    b[31] = static_cast<std::uint8_t>(n);
    return Hash32(b);
}

inline TraceEvent swap(unsigned pool, const std::string& in, const std::string& out, Amount a_in, Amount a_out) {
    TraceEvent e;
    e.kind = EventKind::Swap;
    e.pool = addr(pool);
    e.token_in = tok(in);
    e.token_out = tok(out);
    e.amount_in = std::move(a_in);
    e.amount_out = std::move(a_out);
    return e;
}

inline TraceEvent transfer(const Address& to, Amount amount, const std::string& token = "USDT") {
    TraceEvent e;
    e.kind = EventKind::Transfer;
    e.to = to;
    e.amount = std::move(amount);
    e.token = tok(token);
    return e;
}

inline TraceEvent internal(const Address& to, Amount amount) {
    TraceEvent e;
    e.kind = EventKind::InternalTxn;
    e.to = to;
    e.amount = std::move(amount);
    return e;
}

inline TraceEvent sync(unsigned pool) {
    TraceEvent e;
    e.kind = EventKind::Sync;
    e.pool = addr(pool);
    return e;
}

inline Transaction tx(unsigned n, std::vector<TraceEvent> events) {
    Transaction t;
    t.hash = hash(n);
    t.block_number = 1000 + n;
    t.initiator = addr(0x900 + n);
    for (std::size_t i = 0; i < events.size(); ++i) events[i].index = i;
    t.events = std::move(events);
    return t;
}

/// The worked USDT → WBNB → USD1 → USDT example.
inline Transaction worked_example() {
    return tx(1, {
                     swap(0xa1, "USDT", "WBNB", 1000000, Amount("2980000000000000000")),
                     swap(0xb4, "WBNB", "USD1", Amount("2980000000000000000"), 1001120),
                     swap(0xc7, "USD1", "USDT", 1001120, 1003040),
                     transfer(validator_income_address(), 820),
                     internal(addr(0x77), 1920),
                 });
}

inline PoolState v2_pool(unsigned n, const std::string& a, const std::string& b, Amount ra, Amount rb,
                         std::uint32_t fee = 3000) {
    PoolState p;
    p.address = addr(n);
    p.kind = PoolKind::V2;
    p.token0 = tok(a);
    p.token1 = tok(b);
    p.reserve0 = std::move(ra);
    p.reserve1 = std::move(rb);
    p.fee_ppm = fee;
    return p;
}

inline PoolState v3_pool(unsigned n, const std::string& a, const std::string& b, Amount liquidity, Amount sqrt_p,
                         std::uint32_t fee = 500) {
    PoolState p;
    p.address = addr(n);
    p.kind = PoolKind::V3;
    p.token0 = tok(a);
    p.token1 = tok(b);
    p.liquidity = std::move(liquidity);
    p.sqrt_price_x96 = std::move(sqrt_p);
    p.fee_ppm = fee;
    return p;
}

}  // namespace make
