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

#include "mevforge/ingest/records.hpp"

#include "mevforge/core/error.hpp"

#include <boost/algorithm/string.hpp>
#include <fmt/format.h>

#include <chrono>
#include <istream>
#include <ostream>

namespace mevforge::ingest {

namespace {

constexpr std::size_t kColumns = 15;

std::string sanitize(std::string text) {
    for (char& c : text) {
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    }
    return text;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::uint64_t to_u64(const std::string& v) {
    Amount a = parse_amount(v);
    if (a > Amount(UINT64_MAX)) throw ContractViolation("value out of range: " + v);
    return static_cast<std::uint64_t>(a);
}

Amount signed_amount(const std::string& v) {
    if (!v.empty() && v[0] == '-') return -parse_amount(std::string_view(v).substr(1));
    return parse_amount(v);
}

}  // namespace

void ArbitrageRecord::check() const {
    if (net != gross - share - gas) {
        throw ContractViolation("record " + tx_hash.hex() + ": net != gross - share - gas");
    }
}

ProfitBreakdown ArbitrageRecord::breakdown() const {
    ProfitBreakdown b;
    b.base_token = base_token;
    b.gross = gross;
    b.share = share;
    b.gas_in_base = gas;
    b.net = net;
    b.usd_value = usd_value;
    b.share_usd = share_usd;
    return b;
}

std::string format_utc(std::int64_t unix_seconds) {
    using namespace std::chrono;
    const std::int64_t day = floor_div(unix_seconds, 86400);
    const std::int64_t sod = unix_seconds - day * 86400;
    const year_month_day ymd{sys_days{days{day}}};
    return fmt::format("{:04d}-{:02d}-{:02d}T{:02d}:{:02d}:{:02d}Z", static_cast<int>(ymd.year()),
                       static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()), sod / 3600,
                       sod / 60 % 60, sod % 60);
}

std::int64_t parse_utc(std::string_view text) {
    using namespace std::chrono;
    int y = 0;
    unsigned mo = 0, d = 0, h = 0, mi = 0, s = 0;
    char tail = 0;
    const std::string str(text);
    if (text.size() != 20 ||
        std::sscanf(str.c_str(), "%4d-%2u-%2uT%2u:%2u:%2u%c", &y, &mo, &d, &h, &mi, &s, &tail) != 7 || tail != 'Z') {
        throw ContractViolation("timestamp '" + str + "' is not YYYY-MM-DDTHH:MM:SSZ");
    }
    const year_month_day ymd{year{y}, month{mo}, day{d}};
    if (!ymd.ok() || h > 23 || mi > 59 || s > 59) throw ContractViolation("timestamp '" + str + "' out of range");
    const std::int64_t days_since = sys_days{ymd}.time_since_epoch().count();
    return days_since * 86400 + h * 3600 + mi * 60 + s;
}

RecordWriter::RecordWriter(std::ostream& out) : out_(out) {
    out_ << kRecordsSchema << '\n' << kRecordsHeader << '\n';
}

void RecordWriter::write(const ArbitrageRecord& r) {
    out_ << r.tx_hash.hex() << ',' << r.block_number << ',' << sanitize(r.builder_brand) << ',';
    if (r.base_token.symbol.empty()) {
        out_ << ",,";
    } else {
        out_ << sanitize(r.base_token.symbol) << ',' << r.base_token.address.hex() << ',' << r.base_token.decimals
             << ',';
    }
    if (r.error) {
        out_ << ",,,,,,,";
    } else {
        out_ << r.hop_count << ',' << r.gross << ',' << r.share << ',' << r.gas << ',' << r.net << ','
             << format_exact(r.usd_value) << ',' << format_exact(r.share_usd) << ',';
    }
    out_ << (r.timestamp ? format_utc(*r.timestamp) : std::string()) << ',';
    out_ << (r.error ? "error: " + sanitize(*r.error) : std::string("ok")) << '\n';
}

RecordReader::RecordReader(std::istream& in) : in_(in) {
    std::string line;
    ++line_;
    if (!std::getline(in_, line) || boost::trim_copy(line) != kRecordsSchema) {
        throw ParseError(line_, "missing schema row '" + std::string(kRecordsSchema) + "'");
    }
    ++line_;
    if (!std::getline(in_, line) || boost::trim_copy(line) != kRecordsHeader) {
        throw ParseError(line_, "unexpected column header");
    }
}

std::optional<ArbitrageRecord> RecordReader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        boost::trim_right_if(line, boost::is_any_of("\r"));
        if (line.empty()) continue;
        std::vector<std::string> f;
        boost::split(f, line, boost::is_any_of(","));
        if (f.size() != kColumns) {
            throw ParseError(line_, "expected " + std::to_string(kColumns) + " columns, got " +
                                        std::to_string(f.size()));
        }
        ArbitrageRecord r;
        try {
            r.tx_hash = Hash32::from_hex(f[0]);
            r.block_number = to_u64(f[1]);
            r.builder_brand = f[2];
            if (!f[3].empty()) {
                r.base_token.symbol = f[3];
                r.base_token.address = Address::from_hex(f[4]);
                r.base_token.decimals = static_cast<unsigned>(to_u64(f[5]));
                r.base_token.validate();
            }
            if (!f[13].empty()) r.timestamp = parse_utc(f[13]);
            const std::string& status = f[14];
            if (boost::starts_with(status, "error")) {
                r.error = status.size() > 7 ? status.substr(7) : std::string();
                return r;
            }
            if (status != "ok") throw ContractViolation("status must be ok or error, got '" + status + "'");
            if (r.base_token.symbol.empty()) throw ContractViolation("ok row without base token");
            r.hop_count = static_cast<std::size_t>(to_u64(f[6]));
            r.gross = signed_amount(f[7]);
            r.share = parse_amount(f[8]);
            r.gas = parse_amount(f[9]);
            r.net = signed_amount(f[10]);
            r.usd_value = parse_rational(f[11]);
            r.share_usd = parse_rational(f[12]);
            r.check();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line_, e.what());
        }
        return r;
    }
    return std::nullopt;
}

std::vector<ArbitrageRecord> read_records(std::istream& in) {
    RecordReader reader(in);
    std::vector<ArbitrageRecord> out;
    while (auto r = reader.next()) out.push_back(std::move(*r));
    return out;
}

void write_records(std::ostream& out, const std::vector<ArbitrageRecord>& records) {
    RecordWriter w(out);
    for (const auto& r : records) w.write(r);
}

}  // namespace mevforge::ingest
