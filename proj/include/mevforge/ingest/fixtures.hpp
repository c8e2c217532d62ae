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
#include "mevforge/arb/profit.hpp"
#include "mevforge/ingest/records.hpp"
#include "mevforge/trace/types.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace mevforge::ingest {

/// BSC tokens used by the generators, all with 18 decimals.
const std::vector<TokenId>& bsc_tokens();
const TokenId& bsc_token(const std::string& symbol);

struct TraceGenParams {
    std::size_t tx_count = 1000;
    /// Probability that a transaction carries a planted cycle; the rest split
    /// evenly between open swap paths and swap-free transactions.
    double cycle_fraction = 0.6;
    std::size_t min_hops = 2;
    std::size_t max_hops = 8;
    std::set<Address> share_addresses{validator_income_address()};
    /// Probability of one pool-sink swap routing surplus into a pool.
    double pool_sink_prob = 0.2;
    std::int64_t start_time = 1764115200;  // 2025-11-26T00:00:00Z
};

/// Ground truth for one planted cycle.
struct PlantedCycle {
    Hash32 tx_hash;
    std::vector<std::string> path;  // token symbols, first == last
    std::vector<Address> pools;
    Amount gross = 0;
    Amount share = 0;
    Amount net = 0;
};

struct TraceCorpus {
    std::vector<Transaction> transactions;
    std::vector<PlantedCycle> planted;
};

/// Seeded synthetic transactions. Planted cycles interleave their swaps with
/// Sync events, share transfers, unrelated transfers, internal transactions
/// and optional pool-sink swaps; decoys hold open or non-chaining swap paths
/// or no swaps at all. Gas is zero throughout.
TraceCorpus generate_traces(const TraceGenParams& params, std::uint64_t seed);

struct PoolFixture {
    PoolSet pools;
    /// Profitable WBNB → USDT → USDC → WBNB cycle over the fixture.
    PathDescriptor descriptor;
};

/// Two V2 pools and one V3 pool with a planted WBNB mispricing.
PoolFixture generate_pools(std::uint64_t seed);

/// Random USD-normalized records over the given brands, timestamps spread
/// over `days` UTC days.
std::vector<ArbitrageRecord> generate_records(std::uint64_t seed, std::size_t count,
                                              const std::vector<std::string>& brands, unsigned days = 30);

/// Records whose (brand, token) net-USD cells match the reported totals:
/// 48Club WBNB $1.18M, USDT $0.58M, USD1 $0.10M, USDC $0.05M and Blockrazor
/// WBNB $0.48M, each cell split over several transactions. Cells are exact to
/// within one base unit of the token.
std::vector<ArbitrageRecord> token_profit_fixture();

}  // namespace mevforge::ingest
