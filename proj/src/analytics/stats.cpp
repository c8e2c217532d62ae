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

#include "mevforge/analytics/stats.hpp"

#include <boost/math/distributions/normal.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>

namespace mevforge::analytics {

using boost::multiprecision::cpp_bin_float_50;

std::string_view to_string(TrendDirection d) {
    switch (d) {
        case TrendDirection::Increasing: return "increasing";
        case TrendDirection::Decreasing: return "decreasing";
        case TrendDirection::NoTrend: return "no_trend";
    }
    return "?";
}

double critical_value(const Rational& alpha) {
    if (alpha <= 0 || alpha >= 1) throw ContractViolation("alpha must lie in (0, 1)");
    boost::math::normal_distribution<double> normal;
    return boost::math::quantile(normal, 1.0 - to_double(alpha) / 2.0);
}

TrendResult mann_kendall(const std::vector<Rational>& series, const Rational& alpha) {
    const std::size_t n = series.size();
    if (n < 3) throw InsufficientDataError("trend test needs at least 3 points, got " + std::to_string(n));
    const double crit = critical_value(alpha);

    TrendResult r;
    r.n = n;
    r.alpha = alpha;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (series[j] > series[i]) ++r.s_statistic;
            else if (series[j] < series[i]) --r.s_statistic;
        }
    }

    std::vector<Rational> sorted = series;
    std::sort(sorted.begin(), sorted.end());
    Amount ties = 0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && sorted[j] == sorted[i]) ++j;
        const Amount t = j - i;
        ties += t * (t - 1) * (2 * t + 5);
        i = j;
    }
    const Amount nn = n;
    r.variance = Rational(nn * (nn - 1) * (2 * nn + 5) - ties, Amount(18));
    r.tau = Rational(Amount(r.s_statistic) * 2, nn * (nn - 1));

    if (r.variance > 0 && r.s_statistic != 0) {
        const std::int64_t corrected = r.s_statistic > 0 ? r.s_statistic - 1 : r.s_statistic + 1;
        cpp_bin_float_50 var = cpp_bin_float_50(numerator(r.variance)) / cpp_bin_float_50(denominator(r.variance));
        r.z_score = static_cast<double>(cpp_bin_float_50(corrected) / sqrt(var));
    }
    if (r.z_score >= crit) r.direction = TrendDirection::Increasing;
    else if (r.z_score <= -crit) r.direction = TrendDirection::Decreasing;
    return r;
}

std::vector<std::pair<std::size_t, Rational>> PathComplexity::ecdf() const {
    std::vector<std::pair<std::size_t, Rational>> out;
    std::uint64_t cum = 0;
    for (const auto& [hops, count] : histogram) {
        cum += count;
        out.emplace_back(hops, Rational(Amount(cum), Amount(total)));
    }
    return out;
}

Rational PathComplexity::ecdf_at(std::size_t hops) const {
    if (total == 0) return 0;
    std::uint64_t cum = 0;
    for (const auto& [h, count] : histogram) {
        if (h > hops) break;
        cum += count;
    }
    return Rational(Amount(cum), Amount(total));
}

PathComplexity path_complexity(const std::vector<std::size_t>& hop_counts) {
    PathComplexity p;
    for (auto h : hop_counts) ++p.histogram[h];
    p.total = hop_counts.size();
    return p;
}

PathComplexity path_complexity(const std::vector<ArbitrageCycle>& cycles) {
    std::vector<std::size_t> hops;
    hops.reserve(cycles.size());
    for (const auto& c : cycles) hops.push_back(c.hop_count());
    return path_complexity(hops);
}

double pearson(const std::vector<std::pair<Rational, Rational>>& points) {
    if (points.size() < 2) throw UndefinedCorrelationError("correlation needs at least two points");
    const Rational n = static_cast<long long>(points.size());
    Rational sx = 0, sy = 0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
    }
    const Rational mx = sx / n;
    const Rational my = sy / n;
    Rational sxx = 0, syy = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        const Rational dx = x - mx;
        const Rational dy = y - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0 || syy == 0) throw UndefinedCorrelationError("correlation undefined for zero variance");

    const Rational r2 = sxy * sxy / (sxx * syy);
    cpp_bin_float_50 mag = sqrt(cpp_bin_float_50(numerator(r2)) / cpp_bin_float_50(denominator(r2)));
    double r = static_cast<double>(mag);
    if (r > 1.0) r = 1.0;
    return sxy < 0 ? -r : r;
}

double pathlen_profit_correlation(const std::vector<std::pair<std::size_t, Rational>>& cycles) {
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(cycles.size());
    for (const auto& [hops, profit] : cycles) points.emplace_back(Rational(static_cast<long long>(hops)), profit);
    return pearson(points);
}

}  // namespace mevforge::analytics
