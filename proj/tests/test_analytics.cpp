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

#include "make.hpp"
#include "oracles.hpp"

#include "mevforge/analytics/aggregate.hpp"
#include "mevforge/analytics/report.hpp"
#include "mevforge/analytics/stats.hpp"
#include "mevforge/core/error.hpp"
#include "mevforge/core/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace mevforge;
using namespace mevforge::analytics;

namespace {

std::vector<BrandCount> builder_counts() {
    return {{"48Club", 6119452, 45},  {"Blockrazor", 4292085, 45}, {"Jetbldr", 172018, 41},
            {"Bloxroute", 104217, 44}, {"Nodereal", 73628, 36},    {"Blocksmith", 29343, 34}};
}

BrandedProfit branded(const std::string& brand, const std::string& token, Rational net, Rational share) {
    BrandedProfit p;
    p.brand = brand;
    p.profit.base_token = make::tok(token);
    p.profit.usd_value = std::move(net);
    p.profit.share_usd = std::move(share);
    return p;
}

std::vector<Rational> series(std::initializer_list<int> xs) {
    std::vector<Rational> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("builder market shares") {
    auto t = market_share(builder_counts());
    REQUIRE(t.rows.size() == 6);
    const char* expect[] = {"56.71", "39.78", "1.59", "0.97", "0.68", "0.27"};
    for (std::size_t i = 0; i < 6; ++i) CHECK(format_fixed(t.rows[i].share * 100, 2) == expect[i]);
    CHECK(t.rows[0].brand == "48Club");
    CHECK(t.top_k(2) > Rational(96, 100));
    CHECK(format_fixed(t.top_k(2) * 100, 2) == "96.49");
    Rational sum = 0;
    for (const auto& r : t.rows) sum += r.share;
    CHECK(sum == 1);
    CHECK(t.top_k(100) == 1);
}

TEST_CASE("share edge cases") {
    auto one = market_share(std::map<std::string, std::uint64_t>{{"solo", 9}});
    CHECK(one.rows.front().share == 1);
    auto even = market_share(std::map<std::string, std::uint64_t>{{"b", 5}, {"a", 5}, {"c", 5}});
    CHECK(even.rows[0].brand == "a");
    CHECK(even.rows[2].share == Rational(1, 3));
    CHECK_THROWS_AS(market_share(std::map<std::string, std::uint64_t>{{"a", 0}}), EmptyMarketError);
    CHECK_THROWS_AS(market_share(std::vector<BrandCount>{}), EmptyMarketError);
    CHECK_THROWS_AS(market_share(std::vector<BrandCount>{{"a", 1, 1}, {"a", 2, 1}}), ContractViolation);
}

TEST_CASE("shares agree with a direct division on random markets") {
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        std::map<std::string, std::uint64_t> counts;
        std::uint64_t total = 0;
        const auto n = rng.uniform(1, 12);
        for (std::uint64_t i = 0; i < n; ++i) {
            auto c = rng.uniform(0, 1'000'000);
            counts["b" + std::to_string(i)] = c;
            total += c;
        }
        if (total == 0) continue;
        auto t = market_share(counts);
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            CHECK(t.rows[i].share == Rational(counts.at(t.rows[i].brand), total));
            if (i > 0) CHECK(t.rows[i - 1].share >= t.rows[i].share);
        }
    }
}

TEST_CASE("profit matrix sums net USD per brand and token") {
    auto m = profit_matrix({branded("A", "WBNB", 10, 1), branded("A", "WBNB", 5, 1), branded("A", "USDT", 3, 0),
                            branded("B", "WBNB", 5, 2)});
    CHECK(m.cell("A", "WBNB") == 15);
    CHECK(m.cell("B", "USDT") == 0);
    CHECK(m.brand_totals().at("A") == 18);
    CHECK(m.token_totals().at("WBNB") == 20);
    CHECK(m.grand_total() == 23);
    CHECK(m.token_builder_shares("WBNB").at("A") == Rational(3, 4));
    CHECK(m.token_builder_shares("CAKE").empty());

    BrandedProfit raw;
    raw.brand = "A";
    CHECK_THROWS_AS(profit_matrix({raw}), ContractViolation);
    CHECK_THROWS_AS(proposer_split({raw}), ContractViolation);
}

TEST_CASE("proposer split") {
    auto s = proposer_split({branded("A", "WBNB", 30, 10), branded("A", "USDT", 30, 30), branded("B", "WBNB", 0, 0)});
    CHECK(s.at("A").kept == 60);
    CHECK(s.at("A").paid_to_proposer == 40);
    CHECK(s.at("A").payout_fraction == Rational(2, 5));
    CHECK(s.at("B").payout_fraction == 0);
}

TEST_CASE("Mann-Kendall on hand-checked series") {
    auto up = mann_kendall(series({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
    CHECK(up.s_statistic == 45);
    CHECK(up.variance == 125);
    CHECK(up.z_score == doctest::Approx(44 / std::sqrt(125.0)).epsilon(1e-12));
    CHECK(up.tau == 1);
    CHECK(up.direction == TrendDirection::Increasing);

    auto down = mann_kendall(series({5, 4, 3}));
    CHECK(down.s_statistic == -3);
    CHECK(down.direction == TrendDirection::NoTrend);  // n = 3 cannot reach significance

    auto flat = mann_kendall(series({2, 2, 2, 2, 2}));
    CHECK(flat.s_statistic == 0);
    CHECK(flat.variance == 0);
    CHECK(flat.z_score == 0.0);
    CHECK(flat.direction == TrendDirection::NoTrend);

    // Ties: groups of size 2 and 3 in n = 6.
    auto tied = mann_kendall(series({1, 1, 2, 2, 2, 3}));
    // Var = [6·5·17 − 2·1·9 − 3·2·11] / 18 = (510 − 18 − 66) / 18.
    CHECK(tied.variance == Rational(426, 18));
    CHECK(tied.s_statistic == oracle::mk_s(series({1, 1, 2, 2, 2, 3})));

    CHECK_THROWS_AS(mann_kendall(series({1, 2})), InsufficientDataError);
    CHECK_THROWS_AS(mann_kendall(series({1, 2, 3}), 0), ContractViolation);
    CHECK(critical_value(Rational(1, 20)) == doctest::Approx(1.959963984540054).epsilon(1e-12));
}

TEST_CASE("Mann-Kendall S agrees with the double loop") {
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> xs;
        const auto n = rng.uniform(3, 50);
        for (std::uint64_t i = 0; i < n; ++i) xs.emplace_back(static_cast<long long>(rng.uniform(0, 20)));
        auto r = mann_kendall(xs);
        CHECK(r.s_statistic == oracle::mk_s(xs));
        auto rev = xs;
        std::reverse(rev.begin(), rev.end());
        CHECK(mann_kendall(rev).s_statistic == -r.s_statistic);
    }
}

TEST_CASE("path complexity histogram and ECDF") {
    auto pc = path_complexity(std::vector<std::size_t>{2, 3, 3, 4, 4, 4, 7});
    CHECK(pc.total == 7);
    CHECK(pc.histogram.at(4) == 3);
    auto e = pc.ecdf();
    REQUIRE(e.size() == 4);
    CHECK(e.front() == std::pair<std::size_t, Rational>{2, Rational(1, 7)});
    CHECK(e.back().second == 1);
    CHECK(pc.ecdf_at(1) == 0);
    CHECK(pc.ecdf_at(5) == Rational(6, 7));
    CHECK(pc.ecdf_at(100) == 1);
    CHECK(path_complexity(std::vector<std::size_t>{}).ecdf_at(3) == 0);
}

TEST_CASE("Pearson correlation") {
    using P = std::vector<std::pair<Rational, Rational>>;
    CHECK(pearson(P{{1, 2}, {2, 4}, {3, 6}}) == 1.0);
    CHECK(pearson(P{{1, 3}, {2, 2}, {3, 1}}) == -1.0);
    CHECK_THROWS_AS(pearson(P{{1, 1}}), UndefinedCorrelationError);
    CHECK_THROWS_AS(pearson(P{{1, 1}, {2, 1}, {3, 1}}), UndefinedCorrelationError);

    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        P pts;
        std::vector<std::pair<double, double>> dbl;
        for (int i = 0; i < 40; ++i) {
            auto x = static_cast<long long>(rng.uniform(0, 1000));
            auto y = static_cast<long long>(rng.uniform(0, 1000)) + x / 2;
            pts.emplace_back(x, y);
            dbl.emplace_back(x, y);
        }
        const double r = pearson(pts);
        CHECK(std::abs(r - oracle::two_pass_pearson(dbl)) < 1e-12);
        // Positive affine maps leave the coefficient unchanged.
        P moved;
        for (const auto& [x, y] : pts) moved.emplace_back(x * 3 + 7, y * Rational(1, 9) - 2);
        CHECK(pearson(moved) == r);
    }
    CHECK(pathlen_profit_correlation({{2, 10}, {3, 20}, {4, 30}}) == 1.0);
}

TEST_CASE("daily series zero-fills gaps") {
    auto [first, s] = daily_series({{86400 * 3 + 5, 2}, {86400 * 5 + 100, 4}, {86400 * 3 + 7000, 1}});
    CHECK(first == 3);
    CHECK(s == series({3, 0, 4}));
    CHECK(day_string(0) == "1970-01-01");
    CHECK(day_string(20418) == "2025-11-26");
    CHECK(daily_series({}).second.empty());
}

TEST_CASE("risk scores") {
    auto r = risk_score(make::tok("USDT"), true, true, false);
    CHECK(r.score == Rational(2, 3));
    CHECK(risk_score(make::tok("WBNB"), false, false, false).score == 0);
}

TEST_CASE("report writers") {
    std::ostringstream shares;
    write_shares(shares, market_share(builder_counts()));
    CHECK(shares.str().rfind("brand,blocks,validators,share_pct,cumulative_pct\n48Club,6119452,45,56.71,56.71\n"
                             "Blockrazor,4292085,45,39.78,96.49\n",
                             0) == 0);

    std::ostringstream corr;
    write_correlations(corr, {{"m", 3, 0.5}, {"u", 1, std::nullopt}});
    CHECK(corr.str() == "metric,n,pearson\nm,3,0.500000\nu,1,undefined\n");
    CHECK(format_double(-0.0000001) == "0.000000");
    CHECK(format_double(-1.5) == "-1.500000");
}
