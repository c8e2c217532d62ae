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

#include "mevforge/pbs/model.hpp"

#include "mevforge/core/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace mevforge::pbs {

std::string_view to_string(Protocol p) {
    return p == Protocol::BSCDirect ? "bsc" : "eth";
}

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::ShortHop: return "short_hop";
        case Strategy::LongHop: return "long_hop";
        case Strategy::Mixed: return "mixed";
    }
    return "?";
}

std::string_view to_string(Decay d) {
    return d == Decay::Piecewise ? "piecewise" : "exponential";
}

Protocol parse_protocol(std::string_view text) {
    if (text == "bsc") return Protocol::BSCDirect;
    if (text == "eth") return Protocol::EthRelay;
    throw ConfigError("unknown protocol '" + std::string(text) + "' (expected bsc or eth)");
}

Strategy parse_strategy(std::string_view text) {
    if (text == "short_hop") return Strategy::ShortHop;
    if (text == "long_hop") return Strategy::LongHop;
    if (text == "mixed") return Strategy::Mixed;
    throw ConfigError("unknown strategy '" + std::string(text) + "'");
}

Decay parse_decay(std::string_view text) {
    if (text == "piecewise") return Decay::Piecewise;
    if (text == "exponential") return Decay::Exponential;
    throw ConfigError("unknown decay '" + std::string(text) + "'");
}

Rational strategy_compute_factor(Strategy s) {
    switch (s) {
        case Strategy::ShortHop: return 1;
        case Strategy::LongHop: return 2;
        case Strategy::Mixed: return Rational(3, 2);
    }
    return 1;
}

void BuilderAgent::validate() const {
    if (id.empty()) throw ConfigError("builder id is empty");
    if (latency_ms < 0) throw ConfigError("builder " + id + ": negative latency");
    if (share_ratio_bp > 10000) throw ConfigError("builder " + id + ": share_ratio_bp above 10000");
    if (infra_tier <= 0) throw ConfigError("builder " + id + ": infra_tier must be positive");
    if (!(non_delivery_prob >= 0.0 && non_delivery_prob <= 1.0)) {
        throw ConfigError("builder " + id + ": non_delivery_prob outside [0, 1]");
    }
    if (jitter_ms < 0) throw ConfigError("builder " + id + ": negative jitter");
}

void SlotOutcome::check_invariants() const {
    if (fallback_used && winner) throw ContractViolation("fallback slot has a winner");
    if (!winner) return;
    const Bid* won = nullptr;
    for (const auto& b : bids_received) {
        if (b.builder_id == *winner && (!won || b.offered_payment > won->offered_payment)) won = &b;
    }
    if (!won) throw ContractViolation("winner " + *winner + " submitted no bid");
    if (proposer_payment > won->realized_delta) throw ContractViolation("proposer payment exceeds builder value");
}

void OpportunityModel::validate() const {
    if (peak_value < 0) throw ConfigError("opportunity peak_value is negative");
    if (knee_ms < 0) throw ConfigError("opportunity knee_ms is negative");
    if (deadline_ms <= knee_ms) throw ConfigError("opportunity deadline_ms must exceed knee_ms");
    if (epsilon < 0) throw ConfigError("opportunity epsilon is negative");
    if (gas_floor <= epsilon) throw ConfigError("opportunity gas_floor must exceed epsilon");
}

Amount OpportunityModel::value(const Rational& t_ms) const {
    const Rational age = t_ms - birth_ms;
    if (age <= knee_ms) return peak_value;
    const Amount tail = peak_value < epsilon ? peak_value : epsilon;
    if (age >= deadline_ms) return tail;

    // Decays from peak towards `target`, reached exactly at the deadline.
    const Amount target = peak_value < gas_floor ? peak_value : gas_floor;
    const Rational progress = (age - knee_ms) / (deadline_ms - knee_ms);
    Amount v;
    if (decay == Decay::Piecewise) {
        v = floor(Rational(peak_value) - Rational(peak_value - target) * progress);
    } else if (target == 0) {
        v = 0;
    } else {
        using boost::multiprecision::cpp_bin_float_50;
        cpp_bin_float_50 ratio = cpp_bin_float_50(target) / cpp_bin_float_50(peak_value);
        cpp_bin_float_50 p = cpp_bin_float_50(numerator(progress)) / cpp_bin_float_50(denominator(progress));
        cpp_bin_float_50 x = cpp_bin_float_50(peak_value) * pow(ratio, p);
        v = static_cast<Amount>(boost::multiprecision::floor(x));
        if (v < target) v = target;
        if (v > peak_value) v = peak_value;
    }
    return v;
}

bool ProposerState::is_blacklisted(const std::string& builder, std::uint64_t height) const {
    auto it = blacklist.find(builder);
    return it != blacklist.end() && height < it->second;
}

}  // namespace mevforge::pbs
