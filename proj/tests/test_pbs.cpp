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

#include "mevforge/core/error.hpp"
#include "mevforge/pbs/campaign.hpp"
#include "mevforge/pbs/scenario_io.hpp"
#include "mevforge/pbs/slot.hpp"

#include <doctest.h>

#include <sstream>

using namespace mevforge;
using namespace mevforge::pbs;

namespace {

BuilderAgent agent(const std::string& id, Rational latency, Rational tier = 1, std::uint32_t share = 2000) {
    BuilderAgent b;
    b.id = id;
    b.latency_ms = std::move(latency);
    b.infra_tier = std::move(tier);
    b.share_ratio_bp = share;
    return b;
}

OpportunityModel opportunity() {
    OpportunityModel o;
    o.peak_value = pow10(18);
    o.gas_floor = pow10(15);
    o.epsilon = 0;
    return o;
}

Scenario duopoly(Protocol p, Rational alpha_lat, Rational beta_lat) {
    Scenario s;
    s.protocol = p;
    s.horizon_ms = p == Protocol::EthRelay ? 12000 : 3000;
    auto a = agent("alpha", std::move(alpha_lat));
    auto b = agent("beta", std::move(beta_lat), Rational(6, 5));
    a.jitter_ms = b.jitter_ms = 5;
    s.builders = {a, b};
    s.opportunity = opportunity();
    s.peak_jitter_bp = 2000;
    s.proposer_count = 21;
    return s;
}

std::uint64_t wins(const CampaignSummary& s, const std::string& id) {
    for (const auto& b : s.builders) {
        if (b.builder_id == id) return b.wins;
    }
    return 0;
}

}  // namespace

TEST_CASE("piecewise decay is flat, then linear down to the gas floor") {
    auto o = opportunity();
    o.birth_ms = 10;
    CHECK(o.value(0) == o.peak_value);
    CHECK(o.value(110) == o.peak_value);
    CHECK(o.value(160) == (o.peak_value + o.gas_floor) / 2);
    CHECK(o.value(Rational(2099, 10)) >= o.gas_floor);
    CHECK(o.value(210) == o.epsilon);
    CHECK(o.value(5000) == o.epsilon);

    Amount prev = o.peak_value;
    for (int t = 0; t < 260; t += 3) {
        Amount v = o.value(t);
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("exponential decay stays between target and peak and is monotone") {
    auto o = opportunity();
    o.decay = Decay::Exponential;
    CHECK(o.value(100) == o.peak_value);
    Amount mid = o.value(150);
    // Geometric midpoint of 10^18 and 10^15.
    CHECK(abs(mid - Amount("31622776601683793")) <= 1);
    Amount prev = o.peak_value;
    for (int t = 100; t < 200; t += 7) {
        Amount v = o.value(t);
        CHECK(v <= prev);
        CHECK(v >= o.gas_floor);
        prev = v;
    }
    CHECK(o.value(200) == 0);
}

TEST_CASE("opportunity validation") {
    auto o = opportunity();
    o.epsilon = o.gas_floor;
    CHECK_THROWS_AS(o.validate(), ConfigError);
    o = opportunity();
    o.deadline_ms = o.knee_ms;
    CHECK_THROWS_AS(o.validate(), ConfigError);
}

TEST_CASE("the faster BSC builder wins the latency race") {
    std::vector<BuilderAgent> bs{agent("fast", 5), agent("slow", 60)};
    ProposerState ps;
    std::uint64_t fast = 0;
    for (std::uint64_t h = 0; h < 1000; ++h) {
        auto out = run_slot_bsc(bs, ps, {}, opportunity(), SlotConfig{h}, h);
        fast += out.winner == std::string("fast");
        CHECK_FALSE(out.fallback_used);
    }
    CHECK(fast == 1000);
}

TEST_CASE("bid arrival and payment arithmetic") {
    auto b = agent("m", 7, 2, 2500);
    b.strategy = Strategy::Mixed;
    ProposerState ps;
    auto out = run_slot_bsc({b}, ps, {}, opportunity(), SlotConfig{3, 3000, 10}, 1);
    REQUIRE(out.bids_received.size() == 1);
    const auto& bid = out.bids_received[0];
    // 2·7 + 10·3/2 / 2 = 21.5 ms, still in the flat part.
    CHECK(bid.timestamp_ms == Rational(43, 2));
    CHECK(bid.realized_delta == 2 * pow10(18));
    CHECK(bid.offered_payment == pow10(18) / 2);
    CHECK(out.proposer_payment == bid.offered_payment);
    CHECK(out.realized_builder_profit == bid.realized_delta - bid.offered_payment);
    CHECK(bid.height == 3);
}

TEST_CASE("no valid bids means a fallback block") {
    ProposerState ps;
    auto empty = run_slot_bsc({}, ps, {}, opportunity(), SlotConfig{}, 1);
    CHECK(empty.fallback_used);
    CHECK_FALSE(empty.winner);

    // Arrives after the deadline: only epsilon is left, below the gas floor.
    auto late = run_slot_bsc({agent("late", 150)}, ps, {}, opportunity(), SlotConfig{}, 1);
    CHECK(late.fallback_used);
    CHECK(late.bids_received.size() == 1);

    auto eth = run_slot_eth({}, RelayConfig{}, ps, opportunity(), SlotConfig{}, 1);
    CHECK(eth.fallback_used);

    Scenario s = duopoly(Protocol::BSCDirect, 1, 2);
    s.builders.clear();
    CHECK_THROWS_AS(run_campaign(s, 10, 1), ConfigError);
}

TEST_CASE("ties break on arrival, then on builder id") {
    ProposerState ps;
    auto out = run_slot_bsc({agent("b", 10), agent("a", 10)}, ps, {}, opportunity(), SlotConfig{}, 1);
    CHECK(*out.winner == "a");
    out = run_slot_eth({agent("b", 10), agent("a", 10)}, RelayConfig{0, 0}, ps, opportunity(), SlotConfig{}, 1);
    CHECK(*out.winner == "a");
    CHECK_THROWS_AS(run_slot_bsc({agent("a", 1), agent("a", 2)}, ps, {}, opportunity(), SlotConfig{}, 1),
                    ConfigError);
}

TEST_CASE("non-delivery blacklists the builder on that proposer only") {
    auto flaky = agent("flaky", 1);
    flaky.non_delivery_prob = 1.0;
    std::vector<BuilderAgent> bs{flaky, agent("steady", 30)};
    ProposerConfig cfg;
    cfg.blacklist_slots = 3;
    ProposerState ps;

    auto first = run_slot_bsc(bs, ps, cfg, opportunity(), SlotConfig{10}, 1);
    REQUIRE(first.blacklist_events == std::vector<std::string>{"flaky"});
    CHECK(*first.winner == "steady");
    CHECK(ps.blacklist.at("flaky") == 14);

    for (std::uint64_t h = 11; h < 14; ++h) {
        auto out = run_slot_bsc(bs, ps, cfg, opportunity(), SlotConfig{h}, h);
        CHECK(out.blacklist_events.empty());
        CHECK(out.bids_received.size() == 1);
    }
    auto back = run_slot_bsc(bs, ps, cfg, opportunity(), SlotConfig{14}, 14);
    CHECK(back.blacklist_events.size() == 1);

    ProposerState other;
    CHECK_FALSE(other.is_blacklisted("flaky", 11));

    flaky.non_delivery_prob = 1.5;
    CHECK_THROWS_AS(flaky.validate(), ConfigError);
}

TEST_CASE("slots are reproducible from their seed") {
    auto s = duopoly(Protocol::BSCDirect, 20, 120);
    s.builders[0].non_delivery_prob = 0.1;
    auto a = run_campaign(s, 300, 9);
    auto b = run_campaign(s, 300, 9);
    std::ostringstream la, lb;
    write_slot_log(la, a.outcomes);
    write_slot_log(lb, b.outcomes);
    CHECK(la.str() == lb.str());
    auto c = run_campaign(s, 300, 10);
    std::ostringstream lc;
    write_slot_log(lc, c.outcomes);
    CHECK(la.str() != lc.str());

    // A prefix run reproduces the prefix of a longer run.
    auto shorter = run_campaign(s, 100, 9);
    std::ostringstream ls, lp;
    write_slot_log(ls, shorter.outcomes);
    write_slot_log(lp, std::vector<SlotOutcome>(a.outcomes.begin(), a.outcomes.begin() + 100));
    CHECK(ls.str() == lp.str());
}

TEST_CASE("Ethereum without rebids matches BSC when the proposer sees every bid") {
    // With a listen window covering every arrival and no non-delivery, both
    // proposers pick the best valid bid from the same set.
    std::vector<BuilderAgent> bs{agent("a", 3, 1, 1000), agent("b", 25, Rational(3, 2), 1500),
                                 agent("c", 48, 2, 900)};
    for (auto& b : bs) b.jitter_ms = 20;
    ProposerConfig wide;
    wide.listen_window_ms = 3000;
    RelayConfig no_rebid{0, 0};
    for (std::uint64_t h = 0; h < 300; ++h) {
        ProposerState p1, p2;
        auto bsc = run_slot_bsc(bs, p1, wide, opportunity(), SlotConfig{h}, h * 7 + 1);
        auto eth = run_slot_eth(bs, no_rebid, p2, opportunity(), SlotConfig{h}, h * 7 + 1);
        CHECK(bsc.winner == eth.winner);
        CHECK(bsc.proposer_payment == eth.proposer_payment);
    }
}

TEST_CASE("Ethereum rebids make the proposer payment latency-neutral") {
    const RelayConfig relay{500, 0};
    SlotConfig slot{0, 12000, 10};
    Amount first;
    for (int lat : {1, 40, 90, 400}) {
        ProposerState ps;
        auto out = run_slot_eth({agent("x", lat)}, relay, ps, opportunity(), slot, 3);
        REQUIRE(out.winner);
        if (lat == 1) first = out.proposer_payment;
        CHECK(out.proposer_payment == pow10(18) * 2000 / 10000);
        CHECK(out.proposer_payment == first);
    }
    // A single bid arriving after the horizon is not seen.
    ProposerState ps;
    auto none = run_slot_eth({agent("x", 7000)}, relay, ps, opportunity(), slot, 3);
    CHECK(none.fallback_used);
}

TEST_CASE("cutting latency never costs a BSC builder a slot") {
    for (std::uint64_t h = 0; h < 400; ++h) {
        std::vector<BuilderAgent> slow{agent("me", 45, Rational(11, 10)), agent("x", 20), agent("y", 35, 2, 1200)};
        for (auto& b : slow) b.jitter_ms = 30;
        auto fast = slow;
        fast[0].latency_ms = 15;
        ProposerState p1, p2;
        auto a = run_slot_bsc(slow, p1, {}, opportunity(), SlotConfig{h}, h);
        auto b = run_slot_bsc(fast, p2, {}, opportunity(), SlotConfig{h}, h);
        if (a.winner == std::string("me")) CHECK(b.winner == std::string("me"));
    }
}

TEST_CASE("contestable window and missing horizon") {
    CHECK(contestable_window(Protocol::EthRelay, 12000, 100) == 11900);
    CHECK(contestable_window(Protocol::BSCDirect, 3000, 100) == 0);
    CHECK(contestable_window(Protocol::EthRelay, 100, 250) == 0);
    CHECK_THROWS_AS(contestable_window(Protocol::EthRelay, 0, 1), ContractViolation);
    CHECK(missing_horizon(12000, 3000) == 9000);
    CHECK(missing_horizon(3000, 3000) == 0);
    CHECK_THROWS_AS(missing_horizon(3000, 12000), ContractViolation);
}

TEST_CASE("campaign summaries") {
    auto s = duopoly(Protocol::BSCDirect, 20, 120);
    CHECK_THROWS_AS(run_campaign(s, 0, 1), ContractViolation);
    auto one = run_campaign(s, 1, 1);
    REQUIRE(one.outcomes.size() == 1);
    CHECK(one.summary.slots == 1);
    CHECK(wins(one.summary, "alpha") == 1);
    CHECK(one.summary.builders.front().win_share == 1);

    auto r = run_campaign(s, 500, 2);
    std::uint64_t total = r.summary.fallbacks;
    Amount revenue = 0;
    for (const auto& b : r.summary.builders) {
        total += b.wins;
        revenue += b.proposer_revenue;
    }
    CHECK(total == 500);
    CHECK(revenue == r.summary.proposer_revenue);

    std::ostringstream csv;
    write_summary_csv(csv, r.summary);
    CHECK(csv.str().rfind("builder_id,wins,win_share,profit,proposer_revenue\n", 0) == 0);
    std::ostringstream camp;
    write_campaign_csv(camp, r.summary);
    CHECK(camp.str().rfind("slots,fallbacks,fallback_rate,proposer_revenue\n500,", 0) == 0);
}

TEST_CASE("scenario files load and bad ones list every problem") {
    auto bsc = load_scenario(std::filesystem::path(MEVFORGE_DATA_DIR) / "scenarios/bsc_duopoly.json");
    CHECK(bsc.protocol == Protocol::BSCDirect);
    CHECK(bsc.builders.size() == 2);
    CHECK(bsc.builders[1].infra_tier == Rational(6, 5));
    auto eth = load_scenario(std::filesystem::path(MEVFORGE_DATA_DIR) / "scenarios/eth_duopoly.json");
    CHECK(eth.horizon_ms == 12000);

    std::stringstream bad(R"({"protocol":"tendermint","horizon_ms":"soon","colour":"red",
        "builders":[{"id":"a","latency_ms":1}],"opportunity":{"peak_value":"10"}})");
    try {
        load_scenario(bad);
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("protocol") != std::string::npos);
        CHECK(msg.find("horizon_ms") != std::string::npos);
        CHECK(msg.find("colour") != std::string::npos);
        CHECK(msg.find("gas_floor") != std::string::npos);
    }
    std::stringstream junk("[1,2");
    CHECK_THROWS_AS(load_scenario(junk), ConfigError);
    CHECK_THROWS_AS(load_scenario(std::filesystem::path("/nonexistent/scenario.json")), Error);
}
