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

#include "mevforge/amm/pool_io.hpp"

#include "mevforge/core/error.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>

namespace mevforge {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

TokenId token_from(const json& j) {
    TokenId t{j.at("symbol").get<std::string>(), Address::from_hex(j.at("address").get<std::string>()),
              j.at("decimals").get<unsigned>()};
    t.validate();
    return t;
}

ordered_json token_to(const TokenId& t) {
    ordered_json j;
    j["symbol"] = t.symbol;
    j["address"] = t.address.hex();
    j["decimals"] = t.decimals;
    return j;
}

Amount amount_from(const json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_number_unsigned()) return Amount(v.get<std::uint64_t>());
    return parse_amount(v.get<std::string>());
}

}  // namespace

PoolSet load_pools(std::istream& in) {
    PoolSet pools;
    try {
        json doc = json::parse(in);
        if (!doc.is_array()) throw ConfigError("pool fixture must be a JSON array");
        for (const auto& p : doc) {
            PoolState s;
            s.address = Address::from_hex(p.at("address").get<std::string>());
            auto kind = p.at("kind").get<std::string>();
            if (kind == "v2") {
                s.kind = PoolKind::V2;
                s.reserve0 = amount_from(p, "reserve0");
                s.reserve1 = amount_from(p, "reserve1");
            } else if (kind == "v3") {
                s.kind = PoolKind::V3;
                s.liquidity = amount_from(p, "liquidity");
                s.sqrt_price_x96 = amount_from(p, "sqrt_price_x96");
            } else {
                throw ConfigError("pool " + s.address.hex() + " has unknown kind '" + kind + "'");
            }
            s.token0 = token_from(p.at("token0"));
            s.token1 = token_from(p.at("token1"));
            s.fee_ppm = p.at("fee_ppm").get<std::uint32_t>();
            s.validate();
            if (!pools.emplace(s.address, s).second) throw ConfigError("pool " + s.address.hex() + " listed twice");
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("pool fixture: ") + e.what());
    } catch (const ContractViolation& e) {
        throw ConfigError(std::string("pool fixture: ") + e.what());
    }
    return pools;
}

void write_pools(std::ostream& out, const PoolSet& pools) {
    ordered_json doc = ordered_json::array();
    for (const auto& [addr, s] : pools) {
        ordered_json p;
        p["address"] = addr.hex();
        p["kind"] = std::string(to_string(s.kind));
        p["token0"] = token_to(s.token0);
        p["token1"] = token_to(s.token1);
        p["fee_ppm"] = s.fee_ppm;
        if (s.kind == PoolKind::V2) {
            p["reserve0"] = s.reserve0.str();
            p["reserve1"] = s.reserve1.str();
        } else {
            p["liquidity"] = s.liquidity.str();
            p["sqrt_price_x96"] = s.sqrt_price_x96.str();
        }
        doc.push_back(std::move(p));
    }
    out << doc.dump(2) << '\n';
}

PathDescriptor load_descriptor(std::istream& in) {
    PathDescriptor d;
    try {
        json doc = json::parse(in);
        for (const auto& t : doc.at("tokens")) d.tokens.push_back(token_from(t));
        for (const auto& p : doc.at("pools")) d.pools.push_back(Address::from_hex(p.get<std::string>()));
        for (const auto& f : doc.at("pool_types")) {
            auto k = f.get<std::string>();
            if (k != "v2" && k != "v3") throw ConfigError("unknown pool type '" + k + "'");
            d.pool_type_flags.push_back(k == "v2");
        }
        for (const auto& dir : doc.at("directions")) d.direction_flags.push_back(dir.get<bool>());
        d.validate();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("path descriptor: ") + e.what());
    } catch (const ContractViolation& e) {
        throw ConfigError(std::string("path descriptor: ") + e.what());
    }
    return d;
}

}  // namespace mevforge
