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

#include <optional>
#include <vector>

namespace mevforge {

struct CycleHop {
    TokenId token_in;
    TokenId token_out;
    Address pool;
    Amount amount_in = 0;
    Amount amount_out = 0;

    friend bool operator==(const CycleHop&, const CycleHop&) = default;
};

/// Ordered swap sequence whose entry and exit assets coincide.
struct ArbitrageCycle {
    Hash32 tx_hash;
    TokenId base_token;
    std::vector<CycleHop> path;

    std::size_t hop_count() const noexcept { return path.size(); }

    /// Throws ContractViolation if the path does not start and end in
    /// base_token, does not chain, or has fewer than two hops.
    void check_invariants() const;
};

/// Collects the transaction's swap events in order (pool-sink swaps are
/// redistribution, not hops) and returns them as a cycle when the first
/// swap's input token equals the last swap's output token and the swaps
/// chain. Transactions holding several back-to-back cycles through the same
/// base token come back as one opportunity.
std::optional<ArbitrageCycle> extract_arbitrage_cycle(const Transaction& tx);

}  // namespace mevforge
