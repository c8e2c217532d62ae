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

#include "mevforge/pbs/model.hpp"

#include <cstdint>
#include <vector>

namespace mevforge::pbs {

/// Single-round BSC slot. Each builder observes the opportunity at
/// birth + latency, computes for its compute time and its bid arrives at
/// birth + 2·latency + compute (+ jitter). The bid carries the decayed value
/// scaled by the builder's infra tier; bids below gas_floor are invalid. The
/// proposer waits for the later of its listen window and the first valid
/// arrival, then takes the highest payment (ties: earlier arrival, then
/// smaller id). A builder that fails to deliver the body is blacklisted by
/// this proposer and the next-best bid is tried. No valid bid yields a
/// fallback block.
///
/// Per-slot randomness, drawn from `rng_seed` in builder-id order: one jitter
/// draw and one delivery draw per builder.
SlotOutcome run_slot_bsc(const std::vector<BuilderAgent>& builders, ProposerState& proposer,
                         const ProposerConfig& proposer_config, const OpportunityModel& opportunity,
                         const SlotConfig& slot, std::uint64_t rng_seed);

/// Relay-mediated Ethereum slot. The first bid of each builder is valued like
/// the BSC bid; rebids follow every rebid interval until the horizon and
/// carry the full achievable value (the block is still open). The proposer
/// signs the best header visible at the horizon and pays the final best bid.
/// The relay escrows bodies, so delivery always succeeds.
SlotOutcome run_slot_eth(const std::vector<BuilderAgent>& builders, const RelayConfig& relay,
                         const ProposerState& proposer, const OpportunityModel& opportunity,
                         const SlotConfig& slot, std::uint64_t rng_seed);

/// Length of the window in which competing builders can still replace the
/// winning block. Throws ContractViolation unless horizon_ms > 0.
Rational contestable_window(Protocol protocol, const Rational& horizon_ms, const Rational& delta_lat_ms);

/// Coordination time present on Ethereum but absent on BSC.
/// Throws ContractViolation when h_eth_ms < h_bsc_ms.
Rational missing_horizon(const Rational& h_eth_ms, const Rational& h_bsc_ms);

}  // namespace mevforge::pbs
