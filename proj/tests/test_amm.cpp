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

#include "make.hpp"
#include "oracles.hpp"

#include "mevforge/amm/arbitrage_run.hpp"
#include "mevforge/amm/pool_io.hpp"
#include "mevforge/amm/swap.hpp"
#include "mevforge/core/error.hpp"
#include "mevforge/core/rng.hpp"
#include "mevforge/ingest/fixtures.hpp"

#include <doctest.h>

#include <sstream>

using namespace mevforge;

TEST_CASE("swap_v2 worked numbers") {
    auto p = make::v2_pool(1, "WBNB", "USDT", 1000, 1000, 3000);
    auto r = swap_v2(p, make::tok("WBNB"), 100);
    // 100·0.997·1000 / (1000 + 99.7) = 90.66 -> 90
    CHECK(r.amount_out == 90);
    CHECK(r.pool.reserve0 == 1100);
    CHECK(r.pool.reserve1 == 910);
    auto back = swap_v2(p, make::tok("USDT"), 100);
    CHECK(back.amount_out == 90);
    CHECK(back.pool.reserve0 == 910);
}

TEST_CASE("swap_v2 errors") {
    auto p = make::v2_pool(1, "WBNB", "USDT", 1000, 1000);
    CHECK_THROWS_AS(swap_v2(p, make::tok("USDC"), 10), ContractViolation);
    CHECK_THROWS_AS(swap_v2(p, make::tok("WBNB"), 0), ContractViolation);
    CHECK_THROWS_AS(swap_v2(p, make::tok("WBNB"), 1), DustError);
    auto v3 = make::v3_pool(2, "WBNB", "USDT", 1000, q96());
    CHECK_THROWS_AS(swap_v2(v3, make::tok("WBNB"), 10), ContractViolation);
}

TEST_CASE("swap_v2 matches the invariant oracle on random triples") {
    Rng rng(2024);
    int mismatches = 0;
    for (int i = 0; i < 2000; ++i) {
        Amount r0 = rng.uniform(Amount(1), pow10(rng.uniform(1, 30)));
        Amount r1 = rng.uniform(Amount(1), pow10(rng.uniform(1, 30)));
        Amount in = rng.uniform(Amount(1), pow10(rng.uniform(1, 30)));
        auto fee = static_cast<std::uint32_t>(rng.uniform(0, 100000));
        auto p = make::v2_pool(1, "WBNB", "USDT", r0, r1, fee);
        Amount expect = oracle::v2_out(r0, r1, in, fee);
        Amount got = 0;
        try {
            got = swap_v2(p, make::tok("WBNB"), in).amount_out;
        } catch (const DustError&) {
        }
        mismatches += got != expect;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("swap_v2 never lowers the constant product") {
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        auto p = make::v2_pool(1, "WBNB", "USDT", rng.uniform(pow10(3), pow10(24)), rng.uniform(pow10(3), pow10(24)));
        try {
            auto r = swap_v2(p, rng.bernoulli(0.5) ? make::tok("WBNB") : make::tok("USDT"),
                             rng.uniform(Amount(1), pow10(24)));
            CHECK(r.pool.reserve0 * r.pool.reserve1 >= p.reserve0 * p.reserve1);
            CHECK(r.pool.reserve0 > 0);
            CHECK(r.pool.reserve1 > 0);
        } catch (const DustError&) {
        }
    }
}

TEST_CASE("swap_v3 at unit price follows L·in/(L+in)") {
    const Amount L = pow10(24);
    auto p = make::v3_pool(3, "USDT", "USDC", L, q96(), 0);
    for (Amount in : {pow10(15), pow10(18), pow10(21)}) {
        const Rational ideal = Rational(L * in, L + in);
        for (bool zero_for_one : {true, false}) {
            auto r = swap_v3(p, zero_for_one, in, permissive_price_limit(zero_for_one));
            CHECK(Rational(r.amount_out) <= ideal);
            CHECK(Rational(r.amount_out) >= ideal - 2);
            CHECK(r.amount_consumed == in);
            CHECK(r.amount_remaining == 0);
            if (zero_for_one) CHECK(r.pool.sqrt_price_x96 < q96());
            else CHECK(r.pool.sqrt_price_x96 > q96());
        }
    }
}

TEST_CASE("swap_v3 fee is taken from the input") {
    const Amount L = pow10(24);
    auto free = make::v3_pool(3, "USDT", "USDC", L, q96(), 0);
    auto fee = make::v3_pool(3, "USDT", "USDC", L, q96(), 3000);
    auto a = swap_v3(free, true, pow10(18) * 997 / 1000, 1);
    auto b = swap_v3(fee, true, pow10(18), 1);
    CHECK(a.amount_out == b.amount_out);
}

TEST_CASE("swap_v3 stops at the price limit and reports the remainder") {
    const Amount L = pow10(24);
    auto p = make::v3_pool(3, "USDT", "USDC", L, q96(), 0);
    const Amount limit = q96() * 99 / 100;
    auto r = swap_v3(p, true, pow10(23), limit);
    CHECK(r.pool.sqrt_price_x96 == limit);
    CHECK(r.amount_remaining > 0);
    CHECK(r.amount_consumed + r.amount_remaining == pow10(23));
    // Moving √P from 1 to 0.99 takes L·(1/0.99 − 1) of token0.
    const Rational needed = Rational(L) * (Rational(100, 99) - 1);
    CHECK(Rational(r.amount_consumed) >= needed);
    CHECK(Rational(r.amount_consumed) <= needed + 1);
    CHECK(Rational(r.amount_out) <= Rational(L) / 100);

    auto up = swap_v3(p, false, pow10(23), q96() * 101 / 100);
    CHECK(up.pool.sqrt_price_x96 == q96() * 101 / 100);
    CHECK(up.amount_remaining > 0);
}

TEST_CASE("swap_v3 errors") {
    auto p = make::v3_pool(3, "USDT", "USDC", pow10(20), q96());
    CHECK_THROWS_AS(swap_v3(p, true, 10, q96() + 1), ContractViolation);
    CHECK_THROWS_AS(swap_v3(p, false, 10, q96() - 1), ContractViolation);
    CHECK_THROWS_AS(swap_v3(p, true, 0, 1), ContractViolation);
    auto dead = p;
    dead.liquidity = 0;
    CHECK_THROWS_AS(swap_v3(dead, true, 10, 1), InactivePoolError);
    CHECK_THROWS_AS(dead.validate(), InactivePoolError);
}

namespace {

struct Triangle {
    PoolSet pools;
    PathDescriptor d;
};

/// WBNB -> USDT -> USDC -> WBNB with USDC/WBNB pricing WBNB `discount_bp` cheaper.
Triangle triangle(std::uint64_t discount_bp, bool v3_middle = true) {
    Triangle t;
    const Amount w = pow10(22);
    const Amount u = w * 89178 / 100;
    auto p1 = make::v2_pool(1, "WBNB", "USDT", w, u, 2500);
    auto p3 = make::v2_pool(3, "USDC", "WBNB", u * (10000 - discount_bp) / 10000, w, 2500);
    PoolState p2 = v3_middle ? make::v3_pool(2, "USDT", "USDC", pow10(25), q96(), 100)
                             : make::v2_pool(2, "USDT", "USDC", pow10(25), pow10(25), 100);
    for (auto* p : {&p1, &p2, &p3}) t.pools[p->address] = *p;
    t.d.tokens = {make::tok("WBNB"), make::tok("USDT"), make::tok("USDC"), make::tok("WBNB")};
    t.d.pools = {p1.address, p2.address, p3.address};
    t.d.pool_type_flags = {true, !v3_middle, true};
    t.d.direction_flags = {true, true, true};
    return t;
}

}  // namespace

TEST_CASE("arbitrage_run executes a profitable triangle and pays the proposer") {
    auto t = triangle(200);
    auto before = t.pools;
    RunOptions opt;
    opt.share_ratio_bp = 2700;
    auto out = arbitrage_run(t.d, t.pools, pow10(19), opt);
    REQUIRE(std::holds_alternative<ExecutionResult>(out));
    const auto& r = std::get<ExecutionResult>(out);
    CHECK(r.delta > 0);
    CHECK(r.payout == r.delta * 2700 / 10000);
    CHECK(r.kept + r.payout == r.delta);
    CHECK(r.hop_amounts.size() == 3);
    CHECK(r.delta == r.hop_amounts.back() - pow10(19));
    CHECK(r.share_endpoint == validator_income_address());
    CHECK(t.pools != before);
    CHECK(evaluate_delta(t.d, before, pow10(19), opt) == r.delta);
}

TEST_CASE("arbitrage_run aborts an unprofitable path without touching pools") {
    auto t = triangle(0);
    auto before = t.pools;
    auto out = arbitrage_run(t.d, t.pools, pow10(19));
    REQUIRE(std::holds_alternative<RunAbort>(out));
    CHECK(std::get<RunAbort>(out).delta <= 0);
    CHECK(t.pools == before);
}

TEST_CASE("arbitrage_run aborts on dust") {
    auto t = triangle(200);
    auto before = t.pools;
    auto out = arbitrage_run(t.d, t.pools, 1);
    REQUIRE(std::holds_alternative<RunAbort>(out));
    CHECK(t.pools == before);
}

TEST_CASE("arbitrage_run contract checks") {
    auto t = triangle(200);
    RunOptions opt;
    opt.share_ratio_bp = 10001;
    CHECK_THROWS_AS(arbitrage_run(t.d, t.pools, pow10(18), opt), ContractViolation);
    CHECK_THROWS_AS(arbitrage_run(t.d, t.pools, 0), ContractViolation);

    auto bad = t.d;
    bad.direction_flags[0] = false;
    CHECK_THROWS_AS(arbitrage_run(bad, t.pools, pow10(18)), ContractViolation);
    bad = t.d;
    bad.pool_type_flags[1] = true;
    CHECK_THROWS_AS(arbitrage_run(bad, t.pools, pow10(18)), ContractViolation);
    bad = t.d;
    bad.pools.push_back(make::addr(77));
    CHECK_THROWS_AS(arbitrage_run(bad, t.pools, pow10(18)), ContractViolation);
    bad = t.d;
    bad.pools[2] = make::addr(77);
    CHECK_THROWS_AS(arbitrage_run(bad, t.pools, pow10(18)), LookupError);
}

TEST_CASE("final hop settles the profit in another token") {
    // Path WBNB -> USDT -> WBNB leaves WBNB; the final hop sells it for USDT.
    const Amount w = pow10(22);
    auto a = make::v2_pool(1, "WBNB", "USDT", w, w * 900, 2500);
    auto b = make::v2_pool(2, "WBNB", "USDT", w, w * 880, 2500);
    auto c = make::v2_pool(3, "WBNB", "USDT", w, w * 890, 2500);
    PoolSet pools{{a.address, a}, {b.address, b}, {c.address, c}};
    PathDescriptor d;
    d.tokens = {make::tok("WBNB"), make::tok("USDT"), make::tok("WBNB")};
    d.pools = {a.address, b.address};
    d.pool_type_flags = {true, true};
    d.direction_flags = {true, false};

    RunOptions opt;
    opt.final_hop = FinalHop{c.address, true};
    opt.settlement_balance = pow10(24);  // USDT already held by the contract
    const Amount in = pow10(19);
    Amount plain = evaluate_delta(d, pools, in);
    Amount settled = evaluate_delta(d, pools, in, opt);
    // Δ in USDT = proceeds of selling (in + plain) WBNB, since the input WBNB
    // was not drawn from the USDT balance.
    auto direct = swap_v2(c, make::tok("WBNB"), in + plain);
    CHECK(settled == direct.amount_out);
}

TEST_CASE("best_input_search finds the grid optimum") {
    auto t = triangle(150, false);
    const Amount lo = pow10(16), hi = pow10(21);
    auto best = best_input_search(t.d, t.pools, lo, hi);
    const Amount step = (hi - lo) / 400;
    Amount grid_best = 0, grid_arg = lo;
    for (Amount a = lo; a <= hi; a += step) {
        Amount d = evaluate_delta(t.d, t.pools, a);
        if (d > grid_best) {
            grid_best = d;
            grid_arg = a;
        }
    }
    CHECK(best.delta >= grid_best);
    CHECK(abs(best.amount - grid_arg) <= step);
    CHECK(best.delta == evaluate_delta(t.d, t.pools, best.amount));

    auto flat = triangle(0, false);
    auto none = best_input_search(flat.d, flat.pools, lo, hi);
    CHECK(none.amount == lo);
    CHECK(none.delta <= 0);
    CHECK_THROWS_AS(best_input_search(t.d, t.pools, hi, lo), ContractViolation);
    CHECK_THROWS_AS(best_input_search(t.d, t.pools, 0, hi), ContractViolation);
}

TEST_CASE("pool fixtures round-trip and validate") {
    auto f = ingest::generate_pools(3);
    std::stringstream io;
    write_pools(io, f.pools);
    auto back = load_pools(io);
    CHECK(back == f.pools);
    CHECK(evaluate_delta(f.descriptor, f.pools, pow10(18)) > 0);

    std::stringstream dup(R"([{"address":"0x0000000000000000000000000000000000000001","kind":"v2",
        "token0":{"symbol":"A","address":"0x0000000000000000000000000000000000000002","decimals":18},
        "token1":{"symbol":"B","address":"0x0000000000000000000000000000000000000003","decimals":18},
        "fee_ppm":3000,"reserve0":"0","reserve1":"5"}])");
    CHECK_THROWS_AS(load_pools(dup), ConfigError);
    std::stringstream junk("{");
    CHECK_THROWS_AS(load_pools(junk), ConfigError);
}
