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
#include "mevforge/pbs/model.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mevforge::pbs {

/// Embodied valuation: each slot drifts the fixture's V2 reserves and takes
/// the slot's peak value from best_input_search over the descriptor.
struct EmbodiedConfig {
    PoolSet pools;
    PathDescriptor descriptor;
    /// Maximum relative reserve drift per slot, in basis points.
    std::uint32_t drift_bp = 50;
    Amount search_hi = 0;
};

struct Scenario {
    Protocol protocol = Protocol::BSCDirect;
    Rational horizon_ms = 3000;
    std::vector<BuilderAgent> builders;
    /// Template opportunity; the campaign sets the per-slot peak.
    OpportunityModel opportunity;
    /// Per-slot peak multiplier is uniform in [1 − j, 1 + j] with j in bp.
    std::uint32_t peak_jitter_bp = 0;
    std::size_t proposer_count = 1;
    ProposerConfig proposer;
    RelayConfig relay;
    Rational base_compute_ms = 10;
    std::optional<EmbodiedConfig> embodied;

    void validate() const;
};

struct BuilderSummary {
    std::string builder_id;
    std::uint64_t wins = 0;
    Rational win_share = 0;
    Amount profit = 0;
    Rational profit_share = 0;
    Amount proposer_revenue = 0;
};

struct CampaignSummary {
    std::uint64_t slots = 0;
    std::uint64_t fallbacks = 0;
    Rational fallback_rate = 0;
    Amount proposer_revenue = 0;
    /// Ordered by builder id.
    std::vector<BuilderSummary> builders;
};

struct CampaignResult {
    std::vector<SlotOutcome> outcomes;
    CampaignSummary summary;
};

/// Runs n_slots consecutive slots (heights 0..n−1) with proposers rotating
/// round-robin. Slot h draws from a stream derived from (rng_seed, h) only,
/// so outcomes do not depend on how many draws earlier slots consumed.
CampaignResult run_campaign(const Scenario& scenario, std::uint64_t n_slots, std::uint64_t rng_seed);

CampaignSummary summarize(const std::vector<SlotOutcome>& outcomes, const std::vector<BuilderAgent>& builders);

/// `builder_id,wins,win_share,profit,proposer_revenue` rows, win_share at six
/// decimals.
void write_summary_csv(std::ostream& out, const CampaignSummary& summary);

/// `slots,fallbacks,fallback_rate,proposer_revenue` single row.
void write_campaign_csv(std::ostream& out, const CampaignSummary& summary);

/// One JSON object per slot.
void write_slot_log(std::ostream& out, const std::vector<SlotOutcome>& outcomes);

}  // namespace mevforge::pbs
