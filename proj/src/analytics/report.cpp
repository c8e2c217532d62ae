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

#include "mevforge/analytics/report.hpp"

#include <fmt/format.h>

#include <chrono>
#include <map>
#include <ostream>

namespace mevforge::analytics {

namespace {

std::int64_t day_of(std::int64_t unix_seconds) {
    // Floor division so pre-epoch timestamps land on the right day.
    std::int64_t d = unix_seconds / 86400;
    if (unix_seconds % 86400 < 0) --d;
    return d;
}

std::string pct(const Rational& fraction) {
    return format_fixed(fraction * 100, 2);
}

std::string usd(const Rational& v) {
    return format_fixed(v, 2);
}

}  // namespace

std::pair<std::int64_t, std::vector<Rational>> daily_series(
    const std::vector<std::pair<std::int64_t, Rational>>& observations) {
    if (observations.empty()) return {0, {}};
    std::map<std::int64_t, Rational> by_day;
    for (const auto& [ts, v] : observations) by_day[day_of(ts)] += v;
    const std::int64_t first = by_day.begin()->first;
    const std::int64_t last = by_day.rbegin()->first;
    std::vector<Rational> series(static_cast<std::size_t>(last - first + 1), Rational(0));
    for (const auto& [day, v] : by_day) series[static_cast<std::size_t>(day - first)] = v;
    return {first, std::move(series)};
}

std::string day_string(std::int64_t day) {
    using namespace std::chrono;
    const year_month_day ymd{sys_days{days{day}}};
    return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                       static_cast<unsigned>(ymd.day()));
}

std::string format_double(double v) {
    std::string s = fmt::format("{:.6f}", v);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

void write_shares(std::ostream& out, const ShareTable& table) {
    out << "brand,blocks,validators,share_pct,cumulative_pct\n";
    Rational cum = 0;
    for (const auto& r : table.rows) {
        cum += r.share;
        out << r.brand << ',' << r.block_count << ',' << r.validator_count << ',' << pct(r.share) << ',' << pct(cum)
            << '\n';
    }
}

void write_profit_matrix(std::ostream& out, const ProfitMatrix& matrix) {
    out << "brand,token,net_usd\n";
    for (const auto& [key, v] : matrix.cells()) out << key.first << ',' << key.second << ',' << usd(v) << '\n';
}

void write_token_shares(std::ostream& out, const ProfitMatrix& matrix) {
    out << "token,brand,share_pct\n";
    for (const auto& [token, total] : matrix.token_totals()) {
        for (const auto& [brand, share] : matrix.token_builder_shares(token)) {
            out << token << ',' << brand << ',' << pct(share) << '\n';
        }
    }
}

void write_proposer_split(std::ostream& out, const std::map<std::string, ProposerSplit>& split) {
    out << "brand,kept_usd,paid_usd,payout_pct\n";
    for (const auto& [brand, s] : split) {
        out << brand << ',' << usd(s.kept) << ',' << usd(s.paid_to_proposer) << ',' << pct(s.payout_fraction) << '\n';
    }
}

void write_histogram(std::ostream& out, const PathComplexity& complexity) {
    out << "hop_count,cycles\n";
    for (const auto& [hops, n] : complexity.histogram) out << hops << ',' << n << '\n';
}

void write_ecdf(std::ostream& out, const PathComplexity& complexity) {
    out << "hop_count,ecdf\n";
    for (const auto& [hops, f] : complexity.ecdf()) out << hops << ',' << format_fixed(f, 6) << '\n';
}

void write_trends(std::ostream& out, const std::vector<NamedTrend>& trends) {
    out << "series,first_day,n,s,variance,z,tau,direction,alpha\n";
    for (const auto& t : trends) {
        const auto& r = t.result;
        out << t.series << ',' << day_string(t.first_day) << ',' << r.n << ',' << r.s_statistic << ','
            << format_fixed(r.variance, 4) << ',' << format_double(r.z_score) << ',' << format_fixed(r.tau, 6) << ','
            << to_string(r.direction) << ',' << format_exact(r.alpha) << '\n';
    }
}

void write_correlations(std::ostream& out, const std::vector<CorrelationRow>& rows) {
    out << "metric,n,pearson\n";
    for (const auto& r : rows) {
        out << r.metric << ',' << r.n << ',' << (r.value ? format_double(*r.value) : std::string("undefined")) << '\n';
    }
}

void write_risk_scores(std::ostream& out, const std::vector<RiskScore>& scores) {
    out << "token,freezable,custodial,external_chain,score\n";
    for (const auto& s : scores) {
        out << s.token.symbol << ',' << int(s.freezable) << ',' << int(s.custodial) << ',' << int(s.external_chain)
            << ',' << format_fixed(s.score, 4) << '\n';
    }
}

}  // namespace mevforge::analytics
