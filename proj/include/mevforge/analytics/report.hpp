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

#include "mevforge/analytics/aggregate.hpp"
#include "mevforge/analytics/stats.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mevforge::analytics {

/// Sums values into consecutive UTC days from the earliest to the latest
/// timestamp (unix seconds), zero-filling empty days. Returns the first day
/// (days since epoch) and the series.
std::pair<std::int64_t, std::vector<Rational>> daily_series(
    const std::vector<std::pair<std::int64_t, Rational>>& observations);

/// UTC calendar date of a day index, as YYYY-MM-DD.
std::string day_string(std::int64_t day);

struct NamedTrend {
    std::string series;
    std::int64_t first_day = 0;
    TrendResult result;
};

struct CorrelationRow {
    std::string metric;
    std::size_t n = 0;
    /// Absent when the coefficient is undefined.
    std::optional<double> value;
};

// Every emitter writes a header row followed by rows in a fixed order.
// Percentages and dollars are rounded half away from zero.

/// brand,blocks,validators,share_pct,cumulative_pct
void write_shares(std::ostream& out, const ShareTable& table);
/// brand,token,net_usd
void write_profit_matrix(std::ostream& out, const ProfitMatrix& matrix);
/// token,brand,share_pct
void write_token_shares(std::ostream& out, const ProfitMatrix& matrix);
/// brand,kept_usd,paid_usd,payout_pct
void write_proposer_split(std::ostream& out, const std::map<std::string, ProposerSplit>& split);
/// hop_count,cycles
void write_histogram(std::ostream& out, const PathComplexity& complexity);
/// hop_count,ecdf
void write_ecdf(std::ostream& out, const PathComplexity& complexity);
/// series,first_day,n,s,variance,z,tau,direction,alpha
void write_trends(std::ostream& out, const std::vector<NamedTrend>& trends);
/// metric,n,pearson
void write_correlations(std::ostream& out, const std::vector<CorrelationRow>& rows);
/// token,freezable,custodial,external_chain,score
void write_risk_scores(std::ostream& out, const std::vector<RiskScore>& scores);

/// Fixed six-decimal rendering of a double ("nan" never occurs: callers
/// only pass finite values).
std::string format_double(double v);

}  // namespace mevforge::analytics
