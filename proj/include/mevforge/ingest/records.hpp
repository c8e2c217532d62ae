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
#include "mevforge/core/bytes.hpp"
#include "mevforge/core/numeric.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mevforge::ingest {

/// First line of every records file.
inline constexpr std::string_view kRecordsSchema = "# mevforge-arbitrage-records v1";
inline constexpr std::string_view kRecordsHeader =
    "tx_hash,block_number,builder_brand,base_token,base_token_address,base_decimals,hop_count,gross,share,gas,net,"
    "usd_value,share_usd,timestamp_utc,status";
inline constexpr std::string_view kUnlabeled = "unlabeled";

/// One extracted arbitrage. An error row keeps the transaction identity and
/// carries the failure in `error`; its numeric fields are not meaningful.
struct ArbitrageRecord {
    Hash32 tx_hash;
    std::uint64_t block_number = 0;
    std::string builder_brand{kUnlabeled};
    TokenId base_token;
    std::size_t hop_count = 0;
    Amount gross = 0;
    Amount share = 0;
    /// Gas in base-token units.
    Amount gas = 0;
    Amount net = 0;
    Rational usd_value = 0;
    Rational share_usd = 0;
    /// Unix seconds.
    std::optional<std::int64_t> timestamp;
    std::optional<std::string> error;

    bool ok() const noexcept { return !error; }

    /// Throws ContractViolation unless net = gross − share − gas.
    void check() const;

    ProfitBreakdown breakdown() const;
};

/// ISO-8601 UTC ("2025-11-26T00:00:00Z").
std::string format_utc(std::int64_t unix_seconds);
std::int64_t parse_utc(std::string_view text);

class RecordWriter {
  public:
    /// Writes the schema and header rows.
    explicit RecordWriter(std::ostream& out);

    void write(const ArbitrageRecord& record);

  private:
    std::ostream& out_;
};

/// Streaming reader. Throws ParseError carrying the 1-based file line on a
/// missing schema row, wrong header, wrong column count or bad field.
class RecordReader {
  public:
    explicit RecordReader(std::istream& in);

    std::optional<ArbitrageRecord> next();

  private:
    std::istream& in_;
    std::size_t line_ = 0;
};

std::vector<ArbitrageRecord> read_records(std::istream& in);
void write_records(std::ostream& out, const std::vector<ArbitrageRecord>& records);

}  // namespace mevforge::ingest
