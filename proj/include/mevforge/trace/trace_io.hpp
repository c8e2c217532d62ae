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

#include "mevforge/trace/types.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mevforge {

struct TraceParseOptions {
    /// Mark a transfer as pool_sink when the record omits the flag and its
    /// recipient is a pool that already swapped earlier in the transaction.
    bool infer_pool_sink = false;
};

struct TraceParseStats {
    std::size_t lines = 0;
    std::size_t transactions = 0;
    std::size_t unknown_events = 0;
};

/// Streaming reader over newline-delimited JSON transaction records. One
/// record per line; blank lines are ignored. Throws ParseError (with the
/// 1-based line number) on a malformed record.
class TraceReader {
  public:
    explicit TraceReader(std::istream& in, TraceParseOptions options = {});

    std::optional<Transaction> next();

    const TraceParseStats& stats() const noexcept { return stats_; }

  private:
    std::istream& in_;
    TraceParseOptions options_;
    TraceParseStats stats_;
};

std::vector<Transaction> parse_trace_file(std::istream& in, TraceParseOptions options = {},
                                          TraceParseStats* stats = nullptr);

/// Parses a single record; `line` only feeds error messages.
Transaction parse_transaction(const std::string& record, std::size_t line = 1, TraceParseOptions options = {},
                              std::size_t* unknown_events = nullptr);

/// Canonical single-line rendering (fixed key order, no whitespace, amounts
/// as decimal strings). parse_transaction(serialize_transaction(t)) == t.
std::string serialize_transaction(const Transaction& tx);

void write_trace_file(std::ostream& out, const std::vector<Transaction>& txs);

}  // namespace mevforge
