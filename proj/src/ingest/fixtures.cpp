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

#include "mevforge/ingest/fixtures.hpp"

#include "mevforge/arb/pricing.hpp"
#include "mevforge/core/error.hpp"
#include "mevforge/core/rng.hpp"

#include <algorithm>

namespace mevforge::ingest {

namespace {

/// Tokens with a reference price; planted cycles start from one of these so
/// every extracted record can be valued.
constexpr std::size_t kPricedTokens = 4;

template <class Bytes>
Bytes random_bytes(Rng& rng) {
    std::array<std::uint8_t, Bytes::size> b{};
    for (std::size_t i = 0; i < b.size(); i += 8) {
        std::uint64_t w = rng.next();
        for (std::size_t j = 0; j < 8 && i + j < b.size(); ++j) b[i + j] = static_cast<std::uint8_t>(w >> (8 * j));
    }
    return Bytes(b);
}

const TokenId& pick(Rng& rng, std::size_t limit) {
    return bsc_tokens()[rng.uniform(0, limit - 1)];
}

const TokenId& pick_other(Rng& rng, const TokenId& not_this, std::size_t limit) {
    for (;;) {
        const TokenId& t = pick(rng, limit);
        if (t != not_this) return t;
    }
}

TraceEvent swap(const Address& pool, const TokenId& in, const TokenId& out, Amount a_in, Amount a_out) {
    TraceEvent e;
    e.kind = EventKind::Swap;
    e.pool = pool;
    e.token_in = in;
    e.token_out = out;
    e.amount_in = std::move(a_in);
    e.amount_out = std::move(a_out);
    return e;
}

TraceEvent sync(const Address& pool) {
    TraceEvent e;
    e.kind = EventKind::Sync;
    e.pool = pool;
    return e;
}

TraceEvent transfer(EventKind kind, const Address& to, Amount amount, std::optional<TokenId> token) {
    TraceEvent e;
    e.kind = kind;
    e.to = to;
    e.amount = std::move(amount);
    e.token = std::move(token);
    return e;
}

Amount big(Rng& rng, unsigned lo_exp, unsigned hi_exp) {
    return rng.uniform(pow10(lo_exp), pow10(hi_exp));
}

/// Unrelated events that must not affect extraction or attribution.
TraceEvent noise(Rng& rng, const std::vector<Address>& pools_seen) {
    switch (rng.uniform(0, 2)) {
        case 0: {
            auto e = transfer(EventKind::Transfer, random_bytes<Address>(rng), big(rng, 6, 20),
                              pick(rng, bsc_tokens().size()));
            if (rng.bernoulli(0.5)) e.from = random_bytes<Address>(rng);
            return e;
        }
        case 1:
            return transfer(EventKind::InternalTxn, random_bytes<Address>(rng), big(rng, 6, 20), std::nullopt);
        default:
            return sync(pools_seen.empty() ? random_bytes<Address>(rng) : pools_seen[rng.uniform(0, pools_seen.size() - 1)]);
    }
}

/// Swap chain over `tokens` with fresh pools; returns the swaps (each
/// followed by its Sync) and the pools used.
std::vector<TraceEvent> chain(Rng& rng, const std::vector<TokenId>& tokens, const Amount& first_in,
                              const Amount& last_out, std::vector<Address>& pools) {
    std::vector<TraceEvent> out;
    Amount in = first_in;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        Address pool = random_bytes<Address>(rng);
        pools.push_back(pool);
        Amount o = i + 2 == tokens.size() ? last_out : big(rng, 12, 24);
        out.push_back(swap(pool, tokens[i], tokens[i + 1], in, o));
        out.push_back(sync(pool));
        in = o;
    }
    return out;
}

/// Random interleaving that keeps the relative order of both sequences.
std::vector<TraceEvent> merge(Rng& rng, std::vector<TraceEvent> ordered, std::vector<TraceEvent> loose) {
    std::vector<TraceEvent> out;
    std::size_t i = 0, j = 0;
    while (i < ordered.size() || j < loose.size()) {
        const std::size_t left = (ordered.size() - i) + (loose.size() - j);
        if (rng.uniform(0, left - 1) < ordered.size() - i) {
            out.push_back(std::move(ordered[i++]));
        } else {
            out.push_back(std::move(loose[j++]));
        }
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k].index = k;
    return out;
}

Address token_address(std::string_view hex) {
    return Address::from_hex(hex);
}

}  // namespace

const std::vector<TokenId>& bsc_tokens() {
    static const std::vector<TokenId> tokens = {
        {"WBNB", token_address("0xbb4cdb9cbd36b01bd1cbaebf2de08d9173bc095c"), 18},
        {"USDT", token_address("0x55d398326f99059ff775485246999027b3197955"), 18},
        {"USD1", token_address("0x8d0d000ee44948fc98c9b98a4fa4921476f08b0d"), 18},
        {"USDC", token_address("0x8ac76a51cc950d9822d68b83fe1ad97b32cd580d"), 18},
        {"BTCB", token_address("0x7130d2a12b9bcbfae4f2634d864a1ee1ce3ead9c"), 18},
        {"ETH", token_address("0x2170ed0880ac9a755fd29b2688956bd959f933f8"), 18},
        {"CAKE", token_address("0x0e09fabb73bd3ade0a17ecc321fd13a19e81ce82"), 18},
        {"FDUSD", token_address("0xc5f0f7b66764f6ec8c8dff7ba683102295e16409"), 18},
    };
    return tokens;
}

const TokenId& bsc_token(const std::string& symbol) {
    for (const auto& t : bsc_tokens()) {
        if (t.symbol == symbol) return t;
    }
    throw LookupError("unknown token symbol " + symbol);
}

TraceCorpus generate_traces(const TraceGenParams& p, std::uint64_t seed) {
    if (p.min_hops < 2 || p.max_hops < p.min_hops) throw ContractViolation("hop bounds must satisfy 2 <= min <= max");
    if (p.share_addresses.empty()) throw ContractViolation("no share addresses");
    if (!(p.cycle_fraction >= 0.0 && p.cycle_fraction <= 1.0)) throw ContractViolation("cycle_fraction outside [0, 1]");

    Rng rng(seed);
    const std::vector<Address> shares(p.share_addresses.begin(), p.share_addresses.end());
    const std::size_t all = bsc_tokens().size();

    TraceCorpus corpus;
    std::int64_t ts = p.start_time;
    std::uint64_t block = 48'000'000;
    for (std::size_t n = 0; n < p.tx_count; ++n) {
        Transaction tx;
        tx.hash = random_bytes<Hash32>(rng);
        tx.initiator = random_bytes<Address>(rng);
        block += rng.uniform(0, 2);
        ts += static_cast<std::int64_t>(rng.uniform(0, 30));
        tx.block_number = block;
        tx.timestamp = ts;

        std::vector<TraceEvent> ordered;
        std::vector<TraceEvent> loose;
        std::vector<Address> pools;
        const double kind = rng.unit();
        if (kind < p.cycle_fraction) {
            const std::size_t hops = rng.uniform(p.min_hops, p.max_hops);
            std::vector<TokenId> path{pick(rng, kPricedTokens)};
            for (std::size_t i = 1; i < hops; ++i) {
                const TokenId& prev = path.back();
                TokenId next = pick_other(rng, prev, all);
                // The last intermediate must differ from the base token.
                while (i + 1 == hops && next == path.front()) next = pick_other(rng, prev, all);
                path.push_back(next);
            }
            path.push_back(path.front());

            PlantedCycle truth;
            truth.tx_hash = tx.hash;
            const Amount in = big(rng, 15, 22);
            const Amount gross = rng.uniform(Amount(0), in / 50 + in / 200) - in / 200;
            ordered = chain(rng, path, in, in + gross, pools);
            truth.gross = gross;
            for (const auto& t : path) truth.path.push_back(t.symbol);
            truth.pools = pools;

            const std::uint64_t n_share = rng.uniform(0, 3);
            for (std::uint64_t k = 0; k < n_share; ++k) {
                Amount amt = big(rng, 0, 18);
                truth.share += amt;
                loose.push_back(transfer(EventKind::Transfer, shares[rng.uniform(0, shares.size() - 1)], amt,
                                         path.front()));
            }
            if (rng.bernoulli(p.pool_sink_prob)) {
                Amount amt = big(rng, 0, 18);
                truth.share += amt;
                auto e = swap(random_bytes<Address>(rng), path.front(), pick_other(rng, path.front(), all), amt,
                              big(rng, 0, 18));
                e.pool_sink = true;
                loose.push_back(std::move(e));
            }
            truth.net = truth.gross - truth.share;
            corpus.planted.push_back(std::move(truth));
        } else if (kind < p.cycle_fraction + (1.0 - p.cycle_fraction) / 2) {
            // Open path (exit differs from entry) or a sequence that breaks
            // its chain while still returning to the entry token.
            const std::size_t hops = rng.uniform(1, p.max_hops);
            std::vector<TokenId> path{pick(rng, all)};
            for (std::size_t i = 0; i < hops; ++i) path.push_back(pick_other(rng, path.back(), all));
            while (path.back() == path.front() || path.back() == path[path.size() - 2]) {
                path.back() = pick(rng, all);
            }
            ordered = chain(rng, path, big(rng, 15, 22), big(rng, 15, 22), pools);
            if (hops >= 2 && rng.bernoulli(0.5)) {
                const TokenId stray = pick_other(rng, path.back(), all);
                if (stray != path.front()) {
                    Address pool = random_bytes<Address>(rng);
                    ordered.push_back(swap(pool, stray, path.front(), big(rng, 12, 24), big(rng, 12, 24)));
                }
            }
        }
        const std::uint64_t n_noise = rng.uniform(0, 4);
        for (std::uint64_t k = 0; k < n_noise; ++k) loose.push_back(noise(rng, pools));
        tx.events = merge(rng, std::move(ordered), std::move(loose));
        corpus.transactions.push_back(std::move(tx));
    }
    return corpus;
}

PoolFixture generate_pools(std::uint64_t seed) {
    Rng rng(seed);
    const TokenId& wbnb = bsc_token("WBNB");
    const TokenId& usdt = bsc_token("USDT");
    const TokenId& usdc = bsc_token("USDC");

    auto v2 = [&](const TokenId& a, const TokenId& b, const Amount& ra, const Amount& rb) {
        PoolState s;
        s.address = random_bytes<Address>(rng);
        s.kind = PoolKind::V2;
        const bool a_first = a.address < b.address;
        s.token0 = a_first ? a : b;
        s.token1 = a_first ? b : a;
        s.reserve0 = a_first ? ra : rb;
        s.reserve1 = a_first ? rb : ra;
        s.fee_ppm = 2500;
        return s;
    };

    // WBNB/USDT at the reference price, USDC/WBNB with WBNB cheaper by
    // 1-3%, and a unit-priced USDT/USDC concentrated pool between them.
    const Amount wbnb_depth = big(rng, 21, 22);
    const Amount usdt_depth = wbnb_depth * 89178 / 100;
    const std::uint64_t discount_bp = rng.uniform(100, 300);
    const Amount usdc_depth = usdt_depth * (10000 - discount_bp) / 10000;

    PoolState p1 = v2(wbnb, usdt, wbnb_depth, usdt_depth);
    PoolState p3 = v2(usdc, wbnb, usdc_depth, wbnb_depth);
    PoolState p2;
    p2.address = random_bytes<Address>(rng);
    p2.kind = PoolKind::V3;
    const bool usdt_first = usdt.address < usdc.address;
    p2.token0 = usdt_first ? usdt : usdc;
    p2.token1 = usdt_first ? usdc : usdt;
    p2.liquidity = big(rng, 24, 25);
    p2.sqrt_price_x96 = Amount(1) << 96;
    p2.fee_ppm = 100;

    PoolFixture f;
    for (const auto* p : {&p1, &p2, &p3}) {
        p->validate();
        f.pools.emplace(p->address, *p);
    }
    f.descriptor.tokens = {wbnb, usdt, usdc, wbnb};
    f.descriptor.pools = {p1.address, p2.address, p3.address};
    f.descriptor.pool_type_flags = {true, false, true};
    f.descriptor.direction_flags = {p1.token0 == wbnb, p2.token0 == usdt, p3.token0 == usdc};
    return f;
}

std::vector<ArbitrageRecord> generate_records(std::uint64_t seed, std::size_t count,
                                              const std::vector<std::string>& brands, unsigned days) {
    if (brands.empty()) throw ContractViolation("no brands to generate records for");
    if (days == 0) throw ContractViolation("days must be positive");
    Rng rng(seed);
    const PriceTable prices = PriceTable::reference();
    const std::int64_t start = 1764115200;
    std::vector<std::int64_t> times;
    for (std::size_t i = 0; i < count; ++i) times.push_back(start + static_cast<std::int64_t>(rng.uniform(0, days * 86400ull - 1)));
    std::sort(times.begin(), times.end());

    std::vector<ArbitrageRecord> out;
    std::uint64_t block = 48'000'000;
    for (std::size_t i = 0; i < count; ++i) {
        ArbitrageRecord r;
        r.tx_hash = random_bytes<Hash32>(rng);
        block += rng.uniform(0, 3);
        r.block_number = block;
        r.builder_brand = brands[rng.uniform(0, brands.size() - 1)];
        r.base_token = pick(rng, kPricedTokens);
        r.hop_count = rng.uniform(2, 6);
        r.gross = big(rng, 14, 19);
        r.share = r.gross * rng.uniform(0, 4000) / 10000;
        r.gas = 0;
        r.net = r.gross - r.share - r.gas;
        r.usd_value = usd_value(r.net, r.base_token, prices);
        r.share_usd = usd_value(r.share, r.base_token, prices);
        r.timestamp = times[i];
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ArbitrageRecord> token_profit_fixture() {
    struct Cell {
        const char* brand;
        const char* token;
        std::int64_t usd;
        /// Proposer share of gross, in bp.
        std::uint64_t share_bp;
    };
    static constexpr Cell cells[] = {
        {"48Club", "WBNB", 1'180'000, 2700}, {"48Club", "USDT", 580'000, 2700},
        {"48Club", "USD1", 100'000, 2700},   {"48Club", "USDC", 50'000, 2700},
        {"Blockrazor", "WBNB", 480'000, 500},
    };
    constexpr std::size_t kParts = 4;

    Rng rng(0x70726f666974ull);
    const PriceTable prices = PriceTable::reference();
    std::vector<ArbitrageRecord> out;
    std::uint64_t block = 48'100'000;
    std::int64_t ts = 1764115200;
    for (const auto& c : cells) {
        const TokenId& token = bsc_token(c.token);
        const Amount total = floor(Rational(c.usd) / prices.price(token) * Rational(pow10(token.decimals)));
        Amount left = total;
        for (std::size_t k = 0; k < kParts; ++k) {
            ArbitrageRecord r;
            r.tx_hash = random_bytes<Hash32>(rng);
            r.block_number = block += 7;
            ts += 86400 / 2;
            r.timestamp = ts;
            r.builder_brand = c.brand;
            r.base_token = token;
            r.hop_count = 2 + k % 3;
            r.net = k + 1 == kParts ? left : total / kParts;
            left -= r.net;
            // gross·(1 − s) = net, rounded so that share stays integral.
            r.gross = r.net * 10000 / (10000 - c.share_bp);
            r.share = r.gross - r.net;
            r.usd_value = usd_value(r.net, token, prices);
            r.share_usd = usd_value(r.share, token, prices);
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace mevforge::ingest
