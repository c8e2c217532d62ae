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

#include "mevforge/trace/trace_io.hpp"

#include "mevforge/core/error.hpp"

#include <json.hpp>
#include <spdlog/spdlog.h>

#include <istream>
#include <ostream>
#include <set>

namespace mevforge {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

struct RecordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw RecordError(std::string("missing field '") + key + "'");
    return *it;
}

Amount amount_field(const json& value, const char* key) {
    if (value.is_string()) {
        try {
            return parse_amount(value.get<std::string>());
        } catch (const ContractViolation&) {
            throw RecordError(std::string("field '") + key + "' is not a non-negative decimal");
        }
    }
    if (value.is_number_unsigned()) return Amount(value.get<std::uint64_t>());
    throw RecordError(std::string("field '") + key + "' must be a decimal string");
}

Amount optional_amount(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? Amount(0) : amount_field(*it, key);
}

template <class Bytes>
Bytes bytes_field(const json& value, const char* key) {
    if (!value.is_string()) throw RecordError(std::string("field '") + key + "' must be a hex string");
    try {
        return Bytes::from_hex(value.get<std::string>());
    } catch (const ContractViolation& e) {
        throw RecordError(std::string("field '") + key + "': " + e.what());
    }
}

std::optional<Address> optional_address(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) return std::nullopt;
    return bytes_field<Address>(*it, key);
}

TokenId token_field(const json& value, const char* key) {
    if (!value.is_object()) throw RecordError(std::string("field '") + key + "' must be a token object");
    TokenId token;
    const auto& symbol = require(value, "symbol");
    if (!symbol.is_string()) throw RecordError(std::string(key) + ".symbol must be a string");
    token.symbol = symbol.get<std::string>();
    token.address = bytes_field<Address>(require(value, "address"), "address");
    const auto& decimals = require(value, "decimals");
    if (!decimals.is_number_unsigned()) throw RecordError(std::string(key) + ".decimals must be a non-negative integer");
    token.decimals = decimals.get<unsigned>();
    try {
        token.validate();
    } catch (const ContractViolation& e) {
        throw RecordError(e.what());
    }
    return token;
}

std::optional<TokenId> optional_token(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) return std::nullopt;
    return token_field(*it, key);
}

std::optional<EventKind> parse_kind(const std::string& kind) {
    if (kind == "swap") return EventKind::Swap;
    if (kind == "sync") return EventKind::Sync;
    if (kind == "transfer") return EventKind::Transfer;
    if (kind == "internal") return EventKind::InternalTxn;
    return std::nullopt;
}

ordered_json token_json(const TokenId& token) {
    ordered_json out;
    out["symbol"] = token.symbol;
    out["address"] = token.address.hex();
    out["decimals"] = token.decimals;
    return out;
}

}  // namespace

Transaction parse_transaction(const std::string& record, std::size_t line, TraceParseOptions options,
                              std::size_t* unknown_events) {
    try {
        json obj = json::parse(record);
        if (!obj.is_object()) throw RecordError("record is not an object");

        Transaction tx;
        tx.hash = bytes_field<Hash32>(require(obj, "hash"), "hash");
        const auto& block = require(obj, "block");
        if (!block.is_number_unsigned()) throw RecordError("field 'block' must be a non-negative integer");
        tx.block_number = block.get<std::uint64_t>();
        tx.initiator = bytes_field<Address>(require(obj, "from"), "from");
        tx.gas_used = amount_field(require(obj, "gas_used"), "gas_used");
        tx.gas_price = amount_field(require(obj, "gas_price"), "gas_price");
        if (auto it = obj.find("timestamp"); it != obj.end()) {
            if (!it->is_number_integer()) throw RecordError("field 'timestamp' must be an integer");
            tx.timestamp = it->get<std::int64_t>();
        }

        const auto& events = require(obj, "events");
        if (!events.is_array()) throw RecordError("field 'events' must be an array");

        std::set<Address> swapped_pools;
        std::uint64_t position = 0;
        for (const auto& ev : events) {
            const std::uint64_t slot = position++;
            if (!ev.is_object()) throw RecordError("event is not an object");
            const auto& kind_field = require(ev, "kind");
            if (!kind_field.is_string()) throw RecordError("event kind must be a string");
            auto kind = parse_kind(kind_field.get<std::string>());
            if (!kind) {
                if (unknown_events) ++*unknown_events;
                spdlog::warn("line {}: skipping event of unknown kind '{}'", line, kind_field.get<std::string>());
                continue;
            }

            TraceEvent e;
            e.kind = *kind;
            if (auto it = ev.find("index"); it != ev.end()) {
                if (!it->is_number_unsigned()) throw RecordError("event index must be a non-negative integer");
                e.index = it->get<std::uint64_t>();
            } else {
                e.index = slot;
            }
            e.pool = optional_address(ev, "pool");
            e.token_in = optional_token(ev, "token_in");
            e.token_out = optional_token(ev, "token_out");
            e.amount_in = optional_amount(ev, "amount_in");
            e.amount_out = optional_amount(ev, "amount_out");
            e.to = optional_address(ev, "to");
            e.amount = optional_amount(ev, "amount");
            e.from = optional_address(ev, "from");
            e.token = optional_token(ev, "token");

            auto sink = ev.find("pool_sink");
            if (sink != ev.end()) {
                if (!sink->is_boolean()) throw RecordError("pool_sink must be a boolean");
                e.pool_sink = sink->get<bool>();
            } else if (options.infer_pool_sink && e.kind == EventKind::Transfer && e.to) {
                e.pool_sink = swapped_pools.count(*e.to) > 0;
            }

            if (e.kind == EventKind::Transfer || e.kind == EventKind::InternalTxn) {
                if (ev.find("amount") == ev.end()) throw RecordError(std::string(to_string(e.kind)) + " requires 'amount'");
            }
            try {
                e.validate();
            } catch (const ContractViolation& err) {
                throw RecordError(err.what());
            }
            if (!tx.events.empty() && e.index <= tx.events.back().index) {
                throw RecordError("event indices not strictly increasing");
            }
            if (e.kind == EventKind::Swap) swapped_pools.insert(*e.pool);
            tx.events.push_back(std::move(e));
        }
        return tx;
    } catch (const json::exception& e) {
        throw ParseError(line, e.what());
    } catch (const RecordError& e) {
        throw ParseError(line, e.what());
    }
}

std::string serialize_transaction(const Transaction& tx) {
    ordered_json out;
    out["hash"] = tx.hash.hex();
    out["block"] = tx.block_number;
    out["from"] = tx.initiator.hex();
    if (tx.timestamp) out["timestamp"] = *tx.timestamp;
    out["gas_used"] = tx.gas_used.str();
    out["gas_price"] = tx.gas_price.str();
    ordered_json events = ordered_json::array();
    for (const auto& e : tx.events) {
        ordered_json ev;
        ev["kind"] = std::string(to_string(e.kind));
        ev["index"] = e.index;
        if (e.pool) ev["pool"] = e.pool->hex();
        if (e.token_in) ev["token_in"] = token_json(*e.token_in);
        if (e.token_out) ev["token_out"] = token_json(*e.token_out);
        if (e.kind == EventKind::Swap || e.amount_in != 0) ev["amount_in"] = e.amount_in.str();
        if (e.kind == EventKind::Swap || e.amount_out != 0) ev["amount_out"] = e.amount_out.str();
        if (e.from) ev["from"] = e.from->hex();
        if (e.to) ev["to"] = e.to->hex();
        if (e.token) ev["token"] = token_json(*e.token);
        if (e.kind == EventKind::Transfer || e.kind == EventKind::InternalTxn || e.amount != 0) {
            ev["amount"] = e.amount.str();
        }
        ev["pool_sink"] = e.pool_sink;
        events.push_back(std::move(ev));
    }
    out["events"] = std::move(events);
    return out.dump();
}

TraceReader::TraceReader(std::istream& in, TraceParseOptions options) : in_(in), options_(options) {}

std::optional<Transaction> TraceReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++stats_.lines;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto tx = parse_transaction(line, stats_.lines, options_, &stats_.unknown_events);
        ++stats_.transactions;
        return tx;
    }
    return std::nullopt;
}

std::vector<Transaction> parse_trace_file(std::istream& in, TraceParseOptions options, TraceParseStats* stats) {
    TraceReader reader(in, options);
    std::vector<Transaction> out;
    while (auto tx = reader.next()) out.push_back(std::move(*tx));
    if (stats) *stats = reader.stats();
    return out;
}

void write_trace_file(std::ostream& out, const std::vector<Transaction>& txs) {
    for (const auto& tx : txs) out << serialize_transaction(tx) << '\n';
}

}  // namespace mevforge
