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

#include "mevforge/arb/cycle.hpp"
#include "mevforge/core/error.hpp"
#include "mevforge/core/numeric.hpp"

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace mevforge::analytics {

enum class TrendDirection { Increasing, Decreasing, NoTrend };

std::string_view to_string(TrendDirection d);

struct TrendResult {
    std::int64_t s_statistic = 0;
    /// Tie-corrected Var(S).
    Rational variance = 0;
    /// Continuity-corrected normal score. Irrational in general, so carried
    /// in double precision.
    double z_score = 0.0;
    Rational tau = 0;
    TrendDirection direction = TrendDirection::NoTrend;
    Rational alpha = Rational(1, 20);
    std::size_t n = 0;
};

/// Two-sided standard-normal critical value for significance level alpha.
double critical_value(const Rational& alpha);

/// Mann-Kendall test with tie-corrected variance and ±1 continuity
/// correction. Throws InsufficientDataError below three points and
/// ContractViolation unless 0 < alpha < 1.
TrendResult mann_kendall(const std::vector<Rational>& series, const Rational& alpha = Rational(1, 20));

struct PathComplexity {
    /// hop count -> cycles.
    std::map<std::size_t, std::uint64_t> histogram;
    std::uint64_t total = 0;

    /// (hop count, cumulative fraction) at each observed hop count.
    std::vector<std::pair<std::size_t, Rational>> ecdf() const;
    /// Fraction of cycles with at most `hops` hops; zero when empty.
    Rational ecdf_at(std::size_t hops) const;
};

PathComplexity path_complexity(const std::vector<ArbitrageCycle>& cycles);
PathComplexity path_complexity(const std::vector<std::size_t>& hop_counts);

/// Pearson coefficient. Sums and the squared coefficient are exact; only the
/// final square root is taken in 50-digit floating point. Throws
/// UndefinedCorrelationError with fewer than two points or zero variance.
double pearson(const std::vector<std::pair<Rational, Rational>>& points);

/// Pearson over (hop count, profit per swap).
double pathlen_profit_correlation(const std::vector<std::pair<std::size_t, Rational>>& cycles);

}  // namespace mevforge::analytics
