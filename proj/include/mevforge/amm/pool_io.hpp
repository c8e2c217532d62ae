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

#include "mevforge/amm/pool.hpp"

#include <iosfwd>

namespace mevforge {

/// Pool fixture: a JSON array of objects with `address`, `kind` ("v2"/"v3"),
/// `token0`, `token1` ({symbol, address, decimals}), `fee_ppm`, and either
/// `reserve0`/`reserve1` or `liquidity`/`sqrt_price_x96` as decimal strings.
/// Every pool is validated on load; duplicates are a ConfigError.
PoolSet load_pools(std::istream& in);
void write_pools(std::ostream& out, const PoolSet& pools);

/// Descriptor JSON: `tokens` (token objects), `pools` (addresses),
/// `pool_types` ("v2"/"v3") and `directions` (booleans, true = sell token0).
PathDescriptor load_descriptor(std::istream& in);

}  // namespace mevforge
