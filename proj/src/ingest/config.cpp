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

#include "mevforge/ingest/config.hpp"

#include "mevforge/core/error.hpp"

#include <boost/algorithm/string.hpp>

#include <fstream>
#include <set>
#include <vector>

namespace mevforge::ingest {

namespace {

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("expected a boolean, got '" + v + "'");
}

std::uint64_t parse_u64(const std::string& v) {
    Amount a = parse_amount(v);
    if (a > Amount(UINT64_MAX)) throw ConfigError("value out of range: " + v);
    return static_cast<std::uint64_t>(a);
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> parts;
    boost::split(parts, v, boost::is_any_of(","));
    for (auto& p : parts) boost::trim(p);
    return parts;
}

}  // namespace

RunConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
    RunConfig cfg;
    std::vector<std::string> errors;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        boost::trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (eq == std::string::npos) {
            errors.push_back(where + "expected key = value");
            continue;
        }
        std::string key = boost::trim_copy(line.substr(0, eq));
        std::string value = boost::trim_copy(line.substr(eq + 1));
        if (!seen.insert(key).second) {
            errors.push_back(where + key + ": set twice");
            continue;
        }
        try {
            if (key == "share_addresses") {
                std::set<Address> addrs;
                for (const auto& a : split_list(value)) addrs.insert(Address::from_hex(a));
                if (addrs.empty()) throw ConfigError("no addresses given");
                cfg.share_addresses = ShareAddressSet(std::move(addrs));
            } else if (boost::starts_with(key, "price_table.")) {
                cfg.prices.set(key.substr(12), parse_rational(value));
            } else if (key == "k_hops") {
                cfg.k_hops = static_cast<unsigned>(parse_u64(value));
                if (cfg.k_hops == 0) throw ConfigError("k_hops must be positive");
            } else if (key == "alpha") {
                cfg.alpha = parse_rational(value);
                if (cfg.alpha <= 0 || cfg.alpha >= 1) throw ConfigError("alpha must lie in (0, 1)");
            } else if (key == "seed") {
                cfg.seed = parse_u64(value);
            } else if (key == "scenario") {
                cfg.scenario_path = base_dir / value;
            } else if (key == "infer_pool_sink") {
                cfg.infer_pool_sink = parse_bool(value);
            } else if (key == "trace_flows") {
                cfg.trace_flows = parse_bool(value);
            } else if (boost::starts_with(key, "risk.")) {
                auto bits = split_list(value);
                if (bits.size() != 3) throw ConfigError("expected three bits (freezable,custodial,external_chain)");
                cfg.risk[key.substr(5)] = {parse_bool(bits[0]), parse_bool(bits[1]), parse_bool(bits[2])};
            } else if (boost::starts_with(key, "category.")) {
                auto cat = parse_address_category(value);
                if (!cat) throw ConfigError("unknown address category '" + value + "'");
                cfg.categories[Address::from_hex(key.substr(9))] = *cat;
            } else {
                throw ConfigError("unknown key");
            }
        } catch (const Error& e) {
            errors.push_back(where + key + ": " + e.what());
        }
    }
    if (!errors.empty()) {
        std::string msg = "invalid config:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw ConfigError(msg);
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path.string());
    return parse_config(in, path.parent_path());
}

}  // namespace mevforge::ingest
