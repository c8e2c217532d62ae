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

#include "mevforge/core/bytes.hpp"
#include "mevforge/core/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mevforge {

struct TokenId {
    std::string symbol;
    Address address;
    unsigned decimals = 18;

    /// Throws ContractViolation when decimals exceed 36 or the symbol is empty.
    void validate() const;

    friend bool operator==(const TokenId&, const TokenId&) = default;
    friend auto operator<=>(const TokenId& a, const TokenId& b) {
        if (auto c = a.symbol <=> b.symbol; c != 0) return c;
        if (auto c = a.address <=> b.address; c != 0) return c;
        return a.decimals <=> b.decimals;
    }
};

enum class EventKind { Swap, Sync, Transfer, InternalTxn };

std::string_view to_string(EventKind kind);

/// One decoded execution event. Which optional fields are populated depends on
/// `kind`; `validate()` enforces the per-kind requirements.
struct TraceEvent {
    EventKind kind = EventKind::Sync;
    std::optional<Address> pool;
    std::optional<TokenId> token_in;
    std::optional<TokenId> token_out;
    Amount amount_in = 0;
    Amount amount_out = 0;
    std::optional<Address> to;
    Amount amount = 0;
    /// Swap (or surplus transfer) that routes value into a pool rather than
    /// executing a hop of the cycle.
    bool pool_sink = false;
    std::uint64_t index = 0;
    /// Transfer sender; absent means the transaction initiator.
    std::optional<Address> from;
    /// Token moved by a Transfer; absent for native-value InternalTxn.
    std::optional<TokenId> token;

    void validate() const;

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct Transaction {
    Hash32 hash;
    std::uint64_t block_number = 0;
    Address initiator;
    std::vector<TraceEvent> events;
    Amount gas_used = 0;
    Amount gas_price = 0;
    /// Unix seconds, when the source provides it.
    std::optional<std::int64_t> timestamp;

    Amount gas_cost() const { return gas_used * gas_price; }

    /// Validates every event and the strictly increasing index order.
    void validate() const;

    friend bool operator==(const Transaction&, const Transaction&) = default;
};

struct BuilderLabel {
    std::string brand;
    std::string instance_name;
    Address address;

    friend bool operator==(const BuilderLabel&, const BuilderLabel&) = default;
};

/// Execution blueprint of a multi-hop arbitrage: tokens T0..Tn, pools P1..Pn,
/// pool-type flags (true = V2, false = V3) and direction flags (true = the hop
/// sells the pool's token0).
struct PathDescriptor {
    std::vector<TokenId> tokens;
    std::vector<Address> pools;
    std::vector<bool> pool_type_flags;
    std::vector<bool> direction_flags;

    std::size_t hops() const noexcept { return pools.size(); }

    /// Throws ContractViolation unless |tokens| = |pools| + 1 = |flags| + 1 = |dirs| + 1.
    void validate() const;

    bool is_cycle() const { return !tokens.empty() && tokens.front() == tokens.back(); }
};

}  // namespace mevforge
