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

#include "mevforge/pbs/campaign.hpp"

#include "mevforge/amm/arbitrage_run.hpp"
#include "mevforge/core/error.hpp"
#include "mevforge/core/rng.hpp"
#include "mevforge/pbs/slot.hpp"

#include <json.hpp>

#include <map>
#include <ostream>
#include <set>

namespace mevforge::pbs {

namespace {

constexpr std::uint64_t kPeakStream = 0x7065616b73747265ull;

Amount scale_bp(const Amount& value, std::int64_t bp) {
    return value * (10000 + bp) / 10000;
}

std::int64_t draw_bp(Rng& rng, std::uint32_t max_bp) {
    return static_cast<std::int64_t>(rng.uniform(0, 2 * std::uint64_t{max_bp})) - max_bp;
}

Amount slot_peak(const Scenario& s, std::uint64_t height, std::uint64_t seed) {
    Rng rng(Rng::derive(seed ^ kPeakStream, height));
    if (!s.embodied) return scale_bp(s.opportunity.peak_value, draw_bp(rng, s.peak_jitter_bp));

    const auto& e = *s.embodied;
    PoolSet pools = e.pools;
    for (auto& [addr, pool] : pools) {
        if (pool.kind != PoolKind::V2) continue;
        Amount drifted = scale_bp(pool.reserve0, draw_bp(rng, e.drift_bp));
        if (drifted > 0) pool.reserve0 = drifted;
    }
    auto best = best_input_search(e.descriptor, pools, 1, e.search_hi);
    return best.delta > 0 ? best.delta : Amount(0);
}

}  // namespace

void Scenario::validate() const {
    if (horizon_ms <= 0) throw ConfigError("horizon_ms must be positive");
    if (builders.empty()) throw ConfigError("scenario has no builders");
    std::set<std::string> ids;
    for (const auto& b : builders) {
        b.validate();
        if (!ids.insert(b.id).second) throw ConfigError("duplicate builder id " + b.id);
    }
    opportunity.validate();
    if (peak_jitter_bp > 10000) throw ConfigError("peak_jitter_bp above 10000");
    if (proposer_count == 0) throw ConfigError("proposer count must be positive");
    if (proposer.listen_window_ms < 0) throw ConfigError("listen window is negative");
    if (relay.rebid_interval_ms < 0 || relay.relay_delay_ms < 0) throw ConfigError("negative relay timing");
    if (base_compute_ms < 0) throw ConfigError("base compute time is negative");
    if (embodied) {
        embodied->descriptor.validate();
        if (embodied->search_hi <= 1) throw ConfigError("embodied search_hi must exceed 1");
        if (embodied->drift_bp > 10000) throw ConfigError("drift_bp above 10000");
    }
}

CampaignResult run_campaign(const Scenario& scenario, std::uint64_t n_slots, std::uint64_t rng_seed) {
    if (n_slots == 0) throw ContractViolation("campaign needs at least one slot");
    scenario.validate();

    std::vector<ProposerState> proposers(scenario.proposer_count);
    for (std::size_t i = 0; i < proposers.size(); ++i) proposers[i].index = i;

    CampaignResult result;
    result.outcomes.reserve(n_slots);
    for (std::uint64_t h = 0; h < n_slots; ++h) {
        OpportunityModel opp = scenario.opportunity;
        opp.peak_value = slot_peak(scenario, h, rng_seed);
        SlotConfig slot{h, scenario.horizon_ms, scenario.base_compute_ms};
        auto& proposer = proposers[h % proposers.size()];
        const std::uint64_t seed = Rng::derive(rng_seed, h);
        if (scenario.protocol == Protocol::BSCDirect) {
            result.outcomes.push_back(run_slot_bsc(scenario.builders, proposer, scenario.proposer, opp, slot, seed));
        } else {
            result.outcomes.push_back(run_slot_eth(scenario.builders, scenario.relay, proposer, opp, slot, seed));
        }
    }
    result.summary = summarize(result.outcomes, scenario.builders);
    return result;
}

CampaignSummary summarize(const std::vector<SlotOutcome>& outcomes, const std::vector<BuilderAgent>& builders) {
    CampaignSummary s;
    s.slots = outcomes.size();
    std::map<std::string, BuilderSummary> rows;
    for (const auto& b : builders) rows[b.id].builder_id = b.id;
    Amount total_profit = 0;
    for (const auto& o : outcomes) {
        s.proposer_revenue += o.proposer_payment;
        if (o.fallback_used) {
            ++s.fallbacks;
            continue;
        }
        auto& row = rows[*o.winner];
        row.builder_id = *o.winner;
        ++row.wins;
        row.profit += o.realized_builder_profit;
        row.proposer_revenue += o.proposer_payment;
        total_profit += o.realized_builder_profit;
    }
    if (s.slots > 0) s.fallback_rate = Rational(Amount(s.fallbacks), Amount(s.slots));
    for (auto& [id, row] : rows) {
        if (s.slots > 0) row.win_share = Rational(Amount(row.wins), Amount(s.slots));
        if (total_profit != 0) row.profit_share = Rational(row.profit, total_profit);
        s.builders.push_back(row);
    }
    return s;
}

void write_summary_csv(std::ostream& out, const CampaignSummary& summary) {
    out << "builder_id,wins,win_share,profit,proposer_revenue\n";
    for (const auto& b : summary.builders) {
        out << b.builder_id << ',' << b.wins << ',' << format_fixed(b.win_share, 6) << ',' << b.profit << ','
            << b.proposer_revenue << '\n';
    }
}

void write_campaign_csv(std::ostream& out, const CampaignSummary& summary) {
    out << "slots,fallbacks,fallback_rate,proposer_revenue\n";
    out << summary.slots << ',' << summary.fallbacks << ',' << format_fixed(summary.fallback_rate, 6) << ','
        << summary.proposer_revenue << '\n';
}

void write_slot_log(std::ostream& out, const std::vector<SlotOutcome>& outcomes) {
    using ordered_json = nlohmann::ordered_json;
    for (const auto& o : outcomes) {
        ordered_json j;
        j["height"] = o.height;
        j["winner"] = o.winner ? ordered_json(*o.winner) : ordered_json(nullptr);
        j["proposer_payment"] = o.proposer_payment.str();
        j["fallback_used"] = o.fallback_used;
        j["blacklist_events"] = o.blacklist_events;
        j["builder_profit"] = o.realized_builder_profit.str();
        ordered_json bids = ordered_json::array();
        for (const auto& b : o.bids_received) {
            ordered_json jb;
            jb["builder"] = b.builder_id;
            jb["arrival_ms"] = format_exact(b.timestamp_ms);
            jb["payment"] = b.offered_payment.str();
            jb["value"] = b.realized_delta.str();
            jb["tx_root"] = b.tx_root.hex();
            bids.push_back(std::move(jb));
        }
        j["bids"] = std::move(bids);
        out << j.dump() << '\n';
    }
}

}  // namespace mevforge::pbs
