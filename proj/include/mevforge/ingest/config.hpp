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

#include "mevforge/arb/flows.hpp"
#include "mevforge/arb/pricing.hpp"
#include "mevforge/arb/profit.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace mevforge::ingest {

struct RiskBits {
    bool freezable = false;
    bool custodial = false;
    bool external_chain = false;
};

/// Run configuration, read from a `key = value` file:
///
///   share_addresses   = 0xffff…fffe, 0x…      (comma separated)
///   price_table.WBNB  = 891.78
///   k_hops            = 4
///   alpha             = 0.05
///   seed              = 42
///   scenario          = scenarios/bsc_duopoly.json
///   infer_pool_sink   = false
///   trace_flows       = false
///   risk.USDT         = 1,1,0                  (freezable, custodial, external chain)
///   category.0x…      = CEXHotWallet
///
/// Blank lines and lines starting with `#` are ignored.
struct RunConfig {
    ShareAddressSet share_addresses;
    PriceTable prices = PriceTable::reference();
    unsigned k_hops = 4;
    Rational alpha = Rational(1, 20);
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> scenario_path;
    bool infer_pool_sink = false;
    bool trace_flows = false;
    std::map<std::string, RiskBits> risk;
    std::map<Address, AddressCategory> categories;
};

/// Keys override the defaults; a price_table entry replaces only that symbol.
/// Every problem is collected into one ConfigError.
RunConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

}  // namespace mevforge::ingest
