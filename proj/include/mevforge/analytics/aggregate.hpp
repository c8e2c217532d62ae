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

#include "mevforge/arb/profit.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mevforge::analytics {

struct ShareRow {
    std::string brand;
    std::uint64_t block_count = 0;
    std::uint64_t validator_count = 0;
    Rational share = 0;
};

/// Rows ordered by share (non-increasing), ties by brand.
struct ShareTable {
    std::vector<ShareRow> rows;

    /// Cumulative share of the k largest brands.
    Rational top_k(std::size_t k) const;
};

struct BrandCount {
    std::string brand;
    std::uint64_t blocks = 0;
    std::uint64_t validators = 0;
};

/// Exact block shares. Throws EmptyMarketError when every count is zero and
/// ContractViolation on a repeated brand.
ShareTable market_share(const std::vector<BrandCount>& counts);
ShareTable market_share(const std::map<std::string, std::uint64_t>& block_counts);

struct BrandedProfit {
    std::string brand;
    ProfitBreakdown profit;
};

/// Net USD per (brand, token symbol).
class ProfitMatrix {
  public:
    using Key = std::pair<std::string, std::string>;

    void add(const std::string& brand, const std::string& token, const Rational& usd) { cells_[{brand, token}] += usd; }

    const std::map<Key, Rational>& cells() const noexcept { return cells_; }
    bool empty() const noexcept { return cells_.empty(); }
    Rational cell(const std::string& brand, const std::string& token) const;

    std::map<std::string, Rational> brand_totals() const;
    std::map<std::string, Rational> token_totals() const;
    Rational grand_total() const;

    /// Each brand's fraction of the token's column total. Empty when the
    /// column total is zero.
    std::map<std::string, Rational> token_builder_shares(const std::string& token) const;

  private:
    std::map<Key, Rational> cells_;
};

/// Throws ContractViolation when a breakdown is not USD-normalized.
ProfitMatrix profit_matrix(const std::vector<BrandedProfit>& cycles);

struct ProposerSplit {
    Rational kept = 0;
    Rational paid_to_proposer = 0;
    /// paid / (paid + kept); zero when both are zero.
    Rational payout_fraction = 0;
};

/// Throws ContractViolation when a breakdown is not USD-normalized.
std::map<std::string, ProposerSplit> proposer_split(const std::vector<BrandedProfit>& cycles);

struct RiskScore {
    TokenId token;
    bool freezable = false;
    bool custodial = false;
    bool external_chain = false;
    Rational score = 0;
};

RiskScore risk_score(const TokenId& token, bool freezable, bool custodial, bool external_chain);

}  // namespace mevforge::analytics
