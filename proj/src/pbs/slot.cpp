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

#include "mevforge/pbs/slot.hpp"

#include "mevforge/core/error.hpp"
#include "mevforge/core/rng.hpp"

#include <algorithm>
#include <tuple>

namespace mevforge::pbs {

namespace {

struct Draws {
    Rational jitter_ms;
    bool fails_delivery = false;
};

std::vector<const BuilderAgent*> sorted_builders(const std::vector<BuilderAgent>& builders) {
    std::vector<const BuilderAgent*> out;
    out.reserve(builders.size());
    for (const auto& b : builders) {
        b.validate();
        out.push_back(&b);
    }
    std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i - 1]->id == out[i]->id) throw ConfigError("duplicate builder id " + out[i]->id);
    }
    return out;
}

/// Jitter (integer microseconds) then delivery, per builder in id order.
std::vector<Draws> draw(const std::vector<const BuilderAgent*>& builders, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Draws> out;
    out.reserve(builders.size());
    for (const auto* b : builders) {
        Draws d;
        const Amount max_us = floor(b->jitter_ms * 1000);
        d.jitter_ms = Rational(Amount(rng.uniform(0, static_cast<std::uint64_t>(max_us)))) / 1000;
        d.fails_delivery = rng.bernoulli(b->non_delivery_prob);
        out.push_back(d);
    }
    return out;
}

Hash32 bid_root(const std::string& builder, std::uint64_t height, const Rational& t) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        h ^= 0xff;
        h *= 0x100000001b3ull;
    };
    mix(builder);
    mix(std::to_string(height));
    mix(format_exact(t));
    std::array<std::uint8_t, 32> bytes{};
    for (std::size_t i = 0; i < 4; ++i) {
        std::uint64_t w = Rng::derive(h, i);
        for (std::size_t j = 0; j < 8; ++j) bytes[i * 8 + j] = static_cast<std::uint8_t>(w >> (56 - 8 * j));
    }
    return Hash32(bytes);
}

Rational compute_ms(const BuilderAgent& b, const SlotConfig& slot) {
    return slot.base_compute_ms * strategy_compute_factor(b.strategy) / b.infra_tier;
}

Bid make_bid(const BuilderAgent& b, const SlotConfig& slot, const OpportunityModel& opp, const Rational& arrival,
             const Amount& base_value) {
    Bid bid;
    bid.builder_id = b.id;
    bid.height = slot.height;
    bid.timestamp_ms = arrival;
    bid.tx_root = bid_root(b.id, slot.height, arrival);
    bid.expected_gas_fee = opp.gas_floor;
    bid.realized_delta = floor(Rational(base_value) * b.infra_tier);
    bid.offered_payment = bid.realized_delta * b.share_ratio_bp / 10000;
    return bid;
}

bool valid(const Bid& bid, const OpportunityModel& opp) {
    return bid.realized_delta >= opp.gas_floor;
}

/// Ranking key: higher payment first, then earlier arrival, then smaller id.
bool better(const Bid& a, const Bid& b) {
    if (a.offered_payment != b.offered_payment) return a.offered_payment > b.offered_payment;
    if (a.timestamp_ms != b.timestamp_ms) return a.timestamp_ms < b.timestamp_ms;
    return a.builder_id < b.builder_id;
}

void settle(SlotOutcome& out, const Bid& bid) {
    out.winner = bid.builder_id;
    out.proposer_payment = bid.offered_payment;
    out.realized_builder_profit = bid.realized_delta - bid.offered_payment;
}

void sort_received(SlotOutcome& out) {
    std::stable_sort(out.bids_received.begin(), out.bids_received.end(), [](const Bid& a, const Bid& b) {
        return std::tie(a.timestamp_ms, a.builder_id) < std::tie(b.timestamp_ms, b.builder_id);
    });
}

void check_slot(const SlotConfig& slot, const OpportunityModel& opp) {
    if (slot.horizon_ms <= 0) throw ConfigError("slot horizon must be positive");
    if (slot.base_compute_ms < 0) throw ConfigError("base compute time is negative");
    opp.validate();
}

}  // namespace

SlotOutcome run_slot_bsc(const std::vector<BuilderAgent>& builders, ProposerState& proposer,
                         const ProposerConfig& proposer_config, const OpportunityModel& opportunity,
                         const SlotConfig& slot, std::uint64_t rng_seed) {
    check_slot(slot, opportunity);
    auto agents = sorted_builders(builders);
    auto draws = draw(agents, rng_seed);

    SlotOutcome out;
    out.height = slot.height;
    std::vector<std::pair<Bid, bool>> candidates;  // (bid, fails delivery)
    for (std::size_t i = 0; i < agents.size(); ++i) {
        const auto& b = *agents[i];
        if (proposer.is_blacklisted(b.id, slot.height)) continue;
        Rational arrival = opportunity.birth_ms + 2 * b.latency_ms + compute_ms(b, slot) + draws[i].jitter_ms;
        if (arrival > slot.horizon_ms) continue;
        Bid bid = make_bid(b, slot, opportunity, arrival, opportunity.value(arrival));
        out.bids_received.push_back(bid);
        if (valid(bid, opportunity)) candidates.emplace_back(std::move(bid), draws[i].fails_delivery);
    }
    sort_received(out);

    if (!candidates.empty()) {
        Rational first = candidates.front().first.timestamp_ms;
        for (const auto& c : candidates) first = std::min(first, c.first.timestamp_ms);
        const Rational cutoff = std::max(proposer_config.listen_window_ms, first);
        // Bids in hand at the cutoff rank ahead of later ones; those are only
        // reached after non-deliveries exhaust the first group.
        std::sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
            bool ia = a.first.timestamp_ms <= cutoff;
            bool ib = b.first.timestamp_ms <= cutoff;
            if (ia != ib) return ia;
            return better(a.first, b.first);
        });
        for (const auto& [bid, fails] : candidates) {
            if (fails) {
                out.blacklist_events.push_back(bid.builder_id);
                proposer.blacklist[bid.builder_id] = slot.height + 1 + proposer_config.blacklist_slots;
                continue;
            }
            settle(out, bid);
            break;
        }
    }
    out.fallback_used = !out.winner;
    out.check_invariants();
    return out;
}

SlotOutcome run_slot_eth(const std::vector<BuilderAgent>& builders, const RelayConfig& relay,
                         const ProposerState& proposer, const OpportunityModel& opportunity,
                         const SlotConfig& slot, std::uint64_t rng_seed) {
    check_slot(slot, opportunity);
    if (relay.rebid_interval_ms < 0) throw ConfigError("rebid interval is negative");
    if (relay.relay_delay_ms < 0) throw ConfigError("relay delay is negative");
    auto agents = sorted_builders(builders);
    auto draws = draw(agents, rng_seed);

    SlotOutcome out;
    out.height = slot.height;
    const Bid* best = nullptr;
    std::vector<Bid> visible;
    for (std::size_t i = 0; i < agents.size(); ++i) {
        const auto& b = *agents[i];
        if (proposer.is_blacklisted(b.id, slot.height)) continue;
        Rational arrival = opportunity.birth_ms + 2 * b.latency_ms + compute_ms(b, slot) + draws[i].jitter_ms;
        Amount value = opportunity.value(arrival);
        while (arrival + relay.relay_delay_ms <= slot.horizon_ms) {
            visible.push_back(make_bid(b, slot, opportunity, arrival, value));
            if (relay.rebid_interval_ms == 0) break;
            arrival += relay.rebid_interval_ms;
            // Later bids carry the full value; further rebids repeat it.
            if (value == opportunity.peak_value) break;
            value = opportunity.peak_value;
        }
    }
    for (const auto& bid : visible) {
        if (valid(bid, opportunity) && (!best || better(bid, *best))) best = &bid;
    }
    if (best) settle(out, *best);
    out.bids_received = std::move(visible);
    sort_received(out);
    out.fallback_used = !out.winner;
    out.check_invariants();
    return out;
}

Rational contestable_window(Protocol protocol, const Rational& horizon_ms, const Rational& delta_lat_ms) {
    if (horizon_ms <= 0) throw ContractViolation("horizon must be positive");
    if (protocol == Protocol::BSCDirect) return 0;
    Rational w = horizon_ms - delta_lat_ms;
    return w > 0 ? w : Rational(0);
}

Rational missing_horizon(const Rational& h_eth_ms, const Rational& h_bsc_ms) {
    if (h_eth_ms < h_bsc_ms) throw ContractViolation("Ethereum horizon shorter than BSC horizon");
    return h_eth_ms - h_bsc_ms;
}

}  // namespace mevforge::pbs
