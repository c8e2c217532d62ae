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

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mevforge {

enum class AddressCategory { CEXHotWallet, WalletEOA, Aggregator, Contract, Pool, OtherUnknown };

std::string_view to_string(AddressCategory c);
std::optional<AddressCategory> parse_address_category(std::string_view text);

struct FlowEdge {
    Address from;
    Address to;
    std::optional<TokenId> token;
    Amount amount = 0;
    /// 1 for transfers inside the seed transaction.
    unsigned depth = 1;
    Hash32 tx;
    std::uint64_t event_index = 0;
};

struct FlowGraph {
    std::map<Address, AddressCategory> nodes;
    std::vector<FlowEdge> edges;
    unsigned max_hops = 0;
};

/// Read-only index of value-transfer events by sender. Safe for concurrent
/// readers; the indexed transactions must outlive it.
class TransactionIndex {
  public:
    struct EventRef {
        const Transaction* tx;
        std::size_t event;
    };

    TransactionIndex() = default;
    explicit TransactionIndex(std::span<const Transaction> corpus);

    std::span<const EventRef> outgoing(const Address& sender) const;

  private:
    std::unordered_map<Address, std::vector<EventRef>> by_sender_;
};

/// Sender of a Transfer/InternalTxn: the explicit `from`, else the initiator.
Address transfer_sender(const Transaction& tx, const TraceEvent& e);

/// Breadth-first expansion over Transfer and InternalTxn edges, at most `k`
/// hops from the seed. Hop 1 is the seed's own transfers; hop d+1 follows
/// every corpus transfer sent by an address first reached at hop d.
/// Endpoints missing from `categories` are bucketed OtherUnknown.
FlowGraph trace_flows(const Transaction& seed, const TransactionIndex& corpus, unsigned k,
                      const std::map<Address, AddressCategory>& categories);

}  // namespace mevforge
