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

#include "mevforge/core/error.hpp"
#include "mevforge/ingest/config.hpp"
#include "mevforge/ingest/records.hpp"
#include "mevforge/pbs/campaign.hpp"
#include "mevforge/trace/labels.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace mevforge::ingest {

struct ExtractSummary {
    std::size_t transactions = 0;
    std::size_t records = 0;
    /// Transactions without an arbitrage cycle.
    std::size_t skipped = 0;
    std::size_t error_rows = 0;
    std::size_t unknown_events = 0;
};

/// Builder brand of a transaction: the label of its initiator, else of the
/// first labeled recipient of a transfer or internal transaction.
std::string brand_of(const Transaction& tx, const LabelSet& labels);

/// Extraction core over a trace stream. Writes one record per cycle and,
/// when `paths` is given, `tx_hash,path,pools` rows (tokens and pools joined
/// with '>').
ExtractSummary extract_stream(std::istream& traces, const LabelSet& labels, const RunConfig& config,
                              RecordWriter& records, std::ostream* paths = nullptr);

/// Writes records.csv and paths.csv into out_dir (and flows.csv when the
/// config enables flow tracing, which loads the whole trace file).
ExtractSummary cmd_extract(const std::filesystem::path& traces, const std::filesystem::path& labels,
                           const RunConfig& config, const std::filesystem::path& out_dir);

struct AnalyzeSummary {
    std::size_t records = 0;
    /// Error rows found in the input; they are excluded from every report.
    std::size_t skipped_error_rows = 0;
};

/// Writes shares.csv, profit_matrix.csv, token_shares.csv, proposer_split.csv,
/// path_histogram.csv, path_ecdf.csv, correlations.csv, trends.csv and
/// risk_scores.csv. Block shares come from `blocks` (`brand,blocks[,validators]`
/// rows) when given, else from distinct record blocks per brand. Reports do
/// not depend on record order.
AnalyzeSummary cmd_analyze(const std::filesystem::path& records, const RunConfig& config,
                           const std::filesystem::path& out_dir,
                           const std::optional<std::filesystem::path>& blocks = std::nullopt);

/// Writes slots.ndjson, summary.csv and campaign.csv.
pbs::CampaignSummary cmd_simulate(const std::filesystem::path& scenario, std::uint64_t n_slots, std::uint64_t seed,
                                  const std::filesystem::path& out_dir);

/// kind ∈ {traces, pools, records, scenario}; records accept the profiles
/// "random" (default) and "token-split". Writes the fixture plus
/// manifest.json. Throws UsageError on an unknown kind or profile.
void cmd_gen_fixtures(const std::string& kind, std::uint64_t seed, const std::filesystem::path& out_dir,
                      const std::string& profile = "random", std::size_t count = 0);

struct UsageError : Error {
    using Error::Error;
};

/// Applies MEVFORGE_LOG (trace, debug, info, warn, error, critical, off);
/// the default level is warn.
void init_logging();

}  // namespace mevforge::ingest
