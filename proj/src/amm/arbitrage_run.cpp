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

#include "mevforge/amm/arbitrage_run.hpp"

#include "mevforge/amm/swap.hpp"
#include "mevforge/core/error.hpp"

namespace mevforge {

namespace {

struct Execution {
    Amount delta = 0;
    std::vector<Amount> hop_amounts;
    PoolSet touched;
    bool dust = false;
};

class Ledger {
  public:
    Amount& operator[](const TokenId& token) { return balances_[token]; }

  private:
    std::map<TokenId, Amount> balances_;
};

struct HopSpec {
    const Address& pool;
    bool v2;
    bool zero_for_one;
    const TokenId* token_in;  // null for the final hop (taken from the pool)
    std::size_t limit_key;
};

const PoolState& lookup(const PoolSet& pools, const PoolSet& touched, const Address& addr) {
    if (auto it = touched.find(addr); it != touched.end()) return it->second;
    auto it = pools.find(addr);
    if (it == pools.end()) throw LookupError("pool " + addr.hex() + " not in pool set");
    return it->second;
}

/// Returns (token_out, amount_out); zero output marks dust.
std::pair<TokenId, Amount> run_hop(const HopSpec& hop, const PoolSet& pools, PoolSet& touched, const Amount& amount,
                                   const RunOptions& options) {
    const PoolState& pool = lookup(pools, touched, hop.pool);
    if ((pool.kind == PoolKind::V2) != hop.v2) {
        throw ContractViolation("pool-type flag disagrees with pool " + pool.address.hex());
    }
    const TokenId& sold = hop.zero_for_one ? pool.token0 : pool.token1;
    const TokenId& bought = hop.zero_for_one ? pool.token1 : pool.token0;
    if (hop.token_in && *hop.token_in != sold) {
        throw ContractViolation("direction flag of pool " + pool.address.hex() + " does not sell " +
                                hop.token_in->symbol);
    }
    if (amount == 0) return {bought, Amount(0)};

    if (pool.kind == PoolKind::V2) {
        try {
            auto result = swap_v2(pool, sold, amount);
            touched[hop.pool] = std::move(result.pool);
            return {bought, result.amount_out};
        } catch (const DustError&) {
            return {bought, Amount(0)};
        }
    }
    auto limit_it = options.price_limits.find(hop.limit_key);
    Amount limit = limit_it != options.price_limits.end() ? limit_it->second : permissive_price_limit(hop.zero_for_one);
    auto result = swap_v3(pool, hop.zero_for_one, amount, limit);
    touched[hop.pool] = std::move(result.pool);
    // Unconsumed input stays with the contract and is not threaded forward.
    return {bought, result.amount_out};
}

Execution execute(const PathDescriptor& d, const PoolSet& pools, const Amount& amount0, const RunOptions& options) {
    d.validate();
    if (options.share_ratio_bp > 10000) throw ContractViolation("share ratio above 10000 bp");
    if (amount0 <= 0) throw ContractViolation("initial amount must be positive");

    Execution ex;
    Ledger ledger;

    TokenId settlement = d.tokens.front();
    if (options.settlement_token) {
        settlement = *options.settlement_token;
    } else if (options.final_hop) {
        const auto& fp = lookup(pools, ex.touched, options.final_hop->pool);
        settlement = options.final_hop->zero_for_one ? fp.token1 : fp.token0;
    }
    ledger[settlement] += options.settlement_balance;
    ledger[d.tokens.front()] += amount0;
    const Amount pre = ledger[settlement];

    Amount amount = amount0;
    for (std::size_t i = 0; i < d.hops(); ++i) {
        HopSpec hop{d.pools[i], static_cast<bool>(d.pool_type_flags[i]), static_cast<bool>(d.direction_flags[i]),
                    &d.tokens[i], i};
        auto [token_out, out] = run_hop(hop, pools, ex.touched, amount, options);
        if (token_out != d.tokens[i + 1]) {
            throw ContractViolation("hop " + std::to_string(i) + " yields " + token_out.symbol + ", descriptor expects " +
                                    d.tokens[i + 1].symbol);
        }
        ledger[d.tokens[i]] -= amount;
        ledger[token_out] += out;
        if (out == 0) ex.dust = true;
        amount = out;
        ex.hop_amounts.push_back(amount);
    }
    if (options.final_hop) {
        HopSpec hop{options.final_hop->pool, false, options.final_hop->zero_for_one, &d.tokens.back(), d.hops()};
        const auto& fp = lookup(pools, ex.touched, hop.pool);
        hop.v2 = fp.kind == PoolKind::V2;
        auto [token_out, out] = run_hop(hop, pools, ex.touched, amount, options);
        ledger[d.tokens.back()] -= amount;
        ledger[token_out] += out;
        if (out == 0) ex.dust = true;
        amount = out;
        ex.hop_amounts.push_back(amount);
    }
    ex.delta = ledger[settlement] - pre;
    return ex;
}

}  // namespace

RunOutcome arbitrage_run(const PathDescriptor& descriptor, PoolSet& pools, const Amount& amount0,
                         const RunOptions& options) {
    Execution ex = execute(descriptor, pools, amount0, options);
    if (ex.dust) return RunAbort{"hop output rounds to zero", ex.delta, std::move(ex.hop_amounts)};
    if (ex.delta <= 0) return RunAbort{"profit requirement B_post > B_pre violated", ex.delta, std::move(ex.hop_amounts)};

    for (auto& [addr, state] : ex.touched) pools[addr] = std::move(state);

    ExecutionResult result;
    result.delta = ex.delta;
    result.payout = ex.delta * options.share_ratio_bp / 10000;
    result.kept = ex.delta - result.payout;
    result.hop_amounts = std::move(ex.hop_amounts);
    result.share_endpoint = options.share_endpoint;
    return result;
}

Amount evaluate_delta(const PathDescriptor& descriptor, const PoolSet& pools, const Amount& amount0,
                      const RunOptions& options) {
    return execute(descriptor, pools, amount0, options).delta;
}

SearchResult best_input_search(const PathDescriptor& descriptor, const PoolSet& pools, const Amount& lo,
                               const Amount& hi, const RunOptions& options) {
    if (lo <= 0 || lo >= hi) throw ContractViolation("search bounds must satisfy 0 < lo < hi");
    auto f = [&](const Amount& a) { return evaluate_delta(descriptor, pools, a, options); };

    Amount left = lo;
    Amount right = hi;
    while (right - left > 2) {
        Amount third = (right - left) / 3;
        Amount m1 = left + third;
        Amount m2 = right - third;
        if (f(m1) < f(m2)) {
            left = m1 + 1;
        } else {
            right = m2;
        }
    }
    SearchResult best{left, f(left)};
    for (Amount a = left + 1; a <= right; ++a) {
        Amount d = f(a);
        if (d > best.delta) best = {a, d};
    }
    if (best.delta <= 0) return {lo, f(lo)};
    return best;
}

}  // namespace mevforge
