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

#include "mevforge/analytics/aggregate.hpp"

#include "mevforge/core/error.hpp"

#include <algorithm>
#include <set>

namespace mevforge::analytics {

Rational ShareTable::top_k(std::size_t k) const {
    Rational sum = 0;
    for (std::size_t i = 0; i < k && i < rows.size(); ++i) sum += rows[i].share;
    return sum;
}

ShareTable market_share(const std::vector<BrandCount>& counts) {
    Amount total = 0;
    std::set<std::string> seen;
    for (const auto& c : counts) {
        if (!seen.insert(c.brand).second) throw ContractViolation("brand " + c.brand + " listed twice");
        total += c.blocks;
    }
    if (total == 0) throw EmptyMarketError("no blocks attributed to any builder");

    ShareTable t;
    for (const auto& c : counts) {
        t.rows.push_back({c.brand, c.blocks, c.validators, Rational(Amount(c.blocks), total)});
    }
    std::sort(t.rows.begin(), t.rows.end(), [](const ShareRow& a, const ShareRow& b) {
        if (a.block_count != b.block_count) return a.block_count > b.block_count;
        return a.brand < b.brand;
    });
    return t;
}

ShareTable market_share(const std::map<std::string, std::uint64_t>& block_counts) {
    std::vector<BrandCount> counts;
    for (const auto& [brand, n] : block_counts) counts.push_back({brand, n, 0});
    return market_share(counts);
}

Rational ProfitMatrix::cell(const std::string& brand, const std::string& token) const {
    auto it = cells_.find({brand, token});
    return it == cells_.end() ? Rational(0) : it->second;
}

std::map<std::string, Rational> ProfitMatrix::brand_totals() const {
    std::map<std::string, Rational> out;
    for (const auto& [key, v] : cells_) out[key.first] += v;
    return out;
}

std::map<std::string, Rational> ProfitMatrix::token_totals() const {
    std::map<std::string, Rational> out;
    for (const auto& [key, v] : cells_) out[key.second] += v;
    return out;
}

Rational ProfitMatrix::grand_total() const {
    Rational sum = 0;
    for (const auto& [key, v] : cells_) sum += v;
    return sum;
}

std::map<std::string, Rational> ProfitMatrix::token_builder_shares(const std::string& token) const {
    Rational column = 0;
    for (const auto& [key, v] : cells_) {
        if (key.second == token) column += v;
    }
    std::map<std::string, Rational> out;
    if (column == 0) return out;
    for (const auto& [key, v] : cells_) {
        if (key.second == token) out[key.first] = v / column;
    }
    return out;
}

namespace {

const Rational& usd(const std::optional<Rational>& v, const std::string& brand) {
    if (!v) throw ContractViolation("profit of brand " + brand + " is not USD-normalized");
    return *v;
}

}  // namespace

ProfitMatrix profit_matrix(const std::vector<BrandedProfit>& cycles) {
    ProfitMatrix m;
    for (const auto& c : cycles) m.add(c.brand, c.profit.base_token.symbol, usd(c.profit.usd_value, c.brand));
    return m;
}

std::map<std::string, ProposerSplit> proposer_split(const std::vector<BrandedProfit>& cycles) {
    std::map<std::string, ProposerSplit> out;
    for (const auto& c : cycles) {
        auto& s = out[c.brand];
        s.kept += usd(c.profit.usd_value, c.brand);
        s.paid_to_proposer += usd(c.profit.share_usd, c.brand);
    }
    for (auto& [brand, s] : out) {
        const Rational denom = s.paid_to_proposer + s.kept;
        s.payout_fraction = denom == 0 ? Rational(0) : s.paid_to_proposer / denom;
    }
    return out;
}

RiskScore risk_score(const TokenId& token, bool freezable, bool custodial, bool external_chain) {
    RiskScore r{token, freezable, custodial, external_chain, 0};
    r.score = Rational(int(freezable) + int(custodial) + int(external_chain), 3);
    return r;
}

}  // namespace mevforge::analytics
