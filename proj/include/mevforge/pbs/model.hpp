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

#include "mevforge/core/bytes.hpp"
#include "mevforge/core/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mevforge::pbs {

enum class Protocol { BSCDirect, EthRelay };
enum class Strategy { ShortHop, LongHop, Mixed };
enum class Decay { Piecewise, Exponential };

std::string_view to_string(Protocol p);
std::string_view to_string(Strategy s);
std::string_view to_string(Decay d);
Protocol parse_protocol(std::string_view text);
Strategy parse_strategy(std::string_view text);
Decay parse_decay(std::string_view text);

/// Multiplier applied to a builder's base compute time.
Rational strategy_compute_factor(Strategy s);

struct BuilderAgent {
    std::string id;
    /// One-way delay to the proposer (BSC) or relay (Ethereum).
    Rational latency_ms = 0;
    Strategy strategy = Strategy::ShortHop;
    std::uint32_t share_ratio_bp = 0;
    /// Computation speed and extraction quality multiplier. A tier-2 builder
    /// computes its bid in half the time and captures twice the value.
    Rational infra_tier = 1;
    double non_delivery_prob = 0.0;
    /// Upper bound of the uniform per-slot delay added to the arrival.
    Rational jitter_ms = 0;

    void validate() const;
};

struct Bid {
    std::string builder_id;
    std::uint64_t height = 0;
    Rational timestamp_ms = 0;
    Hash32 tx_root;
    Amount expected_gas_fee = 0;
    Amount offered_payment = 0;
    bool full_body_attached = false;
    /// Value the builder realises if this bid wins; offered_payment never
    /// exceeds it.
    Amount realized_delta = 0;
};

struct SlotOutcome {
    std::uint64_t height = 0;
    std::optional<std::string> winner;
    Amount proposer_payment = 0;
    bool fallback_used = false;
    std::vector<std::string> blacklist_events;
    std::vector<Bid> bids_received;
    Amount realized_builder_profit = 0;

    void check_invariants() const;
};

struct OpportunityModel {
    Rational birth_ms = 0;
    Amount peak_value = 0;
    Decay decay = Decay::Piecewise;
    Rational knee_ms = 100;
    Rational deadline_ms = 200;
    Amount gas_floor = 0;
    /// Residual value at and after the deadline; must stay below gas_floor.
    Amount epsilon = 0;

    void validate() const;

    /// Value of the opportunity at absolute time t. Before birth the value is
    /// the peak.
    Amount value(const Rational& t_ms) const;
};

struct ProposerConfig {
    /// Minimal time after slot start the BSC proposer listens for bids.
    Rational listen_window_ms = 50;
    /// Slots a non-delivering builder stays on a proposer's local blacklist.
    std::uint64_t blacklist_slots = 100;
};

/// Per-proposer mutable state carried across that proposer's slots.
struct ProposerState {
    std::size_t index = 0;
    /// builder id -> first height at which the builder is accepted again.
    std::map<std::string, std::uint64_t> blacklist;

    bool is_blacklisted(const std::string& builder, std::uint64_t height) const;
};

struct RelayConfig {
    /// Interval between rebids; zero disables rebidding.
    Rational rebid_interval_ms = 500;
    /// Delay between the relay receiving a bid and the proposer seeing it.
    Rational relay_delay_ms = 0;
};

struct SlotConfig {
    std::uint64_t height = 0;
    Rational horizon_ms = 3000;
    /// Bid computation time of a ShortHop builder at infra tier 1.
    Rational base_compute_ms = 10;
};

}  // namespace mevforge::pbs
