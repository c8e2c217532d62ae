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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mevforge {

/// Optional normalization hop that swaps the cycle's proceeds into the
/// settlement token.
struct FinalHop {
    Address pool;
    bool zero_for_one = true;
};

struct RunOptions {
    /// Validator share r in basis points, within [0, 10000].
    std::uint32_t share_ratio_bp = 0;
    std::optional<FinalHop> final_hop;
    /// Token whose contract balance measures Δ. Defaults to the final hop's
    /// output token, or to the path's first token when there is no final hop.
    std::optional<TokenId> settlement_token;
    /// Contract balance of the settlement token before the run.
    Amount settlement_balance = 0;
    /// Per-hop V3 price limits (index into the path; the final hop uses
    /// index = hop count). Missing entries use the permissive limit.
    std::map<std::size_t, Amount> price_limits;
    Address share_endpoint = validator_income_address();
};

struct ExecutionResult {
    Amount delta = 0;
    Amount payout = 0;
    Amount kept = 0;
    /// Amount held after each hop, final normalization hop included.
    std::vector<Amount> hop_amounts;
    Address share_endpoint;
};

/// Profit requirement failed (or a hop produced nothing); no pool changed.
struct RunAbort {
    std::string reason;
    Amount delta = 0;
    std::vector<Amount> hop_amounts;
};

using RunOutcome = std::variant<ExecutionResult, RunAbort>;

/// Executes the descriptor hop by hop (V2 or V3 per pool-type flag), threading
/// each output into the next hop, then applies the optional final hop and
/// measures Δ = B_post − B_pre on the settlement token. Δ ≤ 0 aborts the
/// whole run and leaves `pools` untouched; otherwise the touched pools are
/// committed and payout = ⌊Δ·r/10000⌋ goes to the share endpoint.
///
/// Throws ContractViolation on descriptor length mismatch, flag/pool
/// disagreement or r out of range, LookupError when a pool is missing.
RunOutcome arbitrage_run(const PathDescriptor& descriptor, PoolSet& pools, const Amount& amount0,
                         const RunOptions& options = {});

/// Δ the run would realise, without the profit requirement and without
/// mutating anything. Hops that round to zero propagate zero.
Amount evaluate_delta(const PathDescriptor& descriptor, const PoolSet& pools, const Amount& amount0,
                      const RunOptions& options = {});

struct SearchResult {
    Amount amount;
    Amount delta;
};

/// Ternary search for the input in [lo, hi] maximizing Δ, assuming a
/// unimodal profit curve. Returns (lo, Δ(lo)) when nothing is profitable.
SearchResult best_input_search(const PathDescriptor& descriptor, const PoolSet& pools, const Amount& lo,
                               const Amount& hi, const RunOptions& options = {});

}  // namespace mevforge
