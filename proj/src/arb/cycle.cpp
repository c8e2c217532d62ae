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

#include "mevforge/arb/cycle.hpp"

#include "mevforge/core/error.hpp"

namespace mevforge {

void ArbitrageCycle::check_invariants() const {
    if (path.size() < 2) throw ContractViolation("arbitrage cycle needs at least two hops");
    if (path.front().token_in != base_token || path.back().token_out != base_token) {
        throw ContractViolation("arbitrage cycle does not start and end in its base token");
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (path[i].token_out != path[i + 1].token_in) {
            throw ContractViolation("arbitrage cycle breaks between hop " + std::to_string(i) + " and " +
                                    std::to_string(i + 1));
        }
    }
}

std::optional<ArbitrageCycle> extract_arbitrage_cycle(const Transaction& tx) {
    std::vector<CycleHop> swaps;
    for (const auto& e : tx.events) {
        if (e.kind != EventKind::Swap || e.pool_sink) continue;
        swaps.push_back(CycleHop{*e.token_in, *e.token_out, *e.pool, e.amount_in, e.amount_out});
    }
    if (swaps.empty()) return std::nullopt;
    if (swaps.front().token_in != swaps.back().token_out) return std::nullopt;
    for (std::size_t i = 0; i + 1 < swaps.size(); ++i) {
        if (swaps[i].token_out != swaps[i + 1].token_in) return std::nullopt;
    }

    ArbitrageCycle cycle{tx.hash, swaps.front().token_in, std::move(swaps)};
    cycle.check_invariants();
    return cycle;
}

}  // namespace mevforge
