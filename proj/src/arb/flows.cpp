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

#include "mevforge/arb/flows.hpp"

#include <set>
#include <utility>

namespace mevforge {

std::string_view to_string(AddressCategory c) {
    switch (c) {
        case AddressCategory::CEXHotWallet: return "CEXHotWallet";
        case AddressCategory::WalletEOA: return "WalletEOA";
        case AddressCategory::Aggregator: return "Aggregator";
        case AddressCategory::Contract: return "Contract";
        case AddressCategory::Pool: return "Pool";
        case AddressCategory::OtherUnknown: return "OtherUnknown";
    }
    return "OtherUnknown";
}

std::optional<AddressCategory> parse_address_category(std::string_view text) {
    for (auto c : {AddressCategory::CEXHotWallet, AddressCategory::WalletEOA, AddressCategory::Aggregator,
                   AddressCategory::Contract, AddressCategory::Pool, AddressCategory::OtherUnknown}) {
        if (to_string(c) == text) return c;
    }
    return std::nullopt;
}

namespace {

bool is_value_transfer(const TraceEvent& e) {
    return e.kind == EventKind::Transfer || e.kind == EventKind::InternalTxn;
}

}  // namespace

Address transfer_sender(const Transaction& tx, const TraceEvent& e) {
    return e.from.value_or(tx.initiator);
}

TransactionIndex::TransactionIndex(std::span<const Transaction> corpus) {
    for (const auto& tx : corpus) {
        for (std::size_t i = 0; i < tx.events.size(); ++i) {
            if (is_value_transfer(tx.events[i])) by_sender_[transfer_sender(tx, tx.events[i])].push_back({&tx, i});
        }
    }
}

std::span<const TransactionIndex::EventRef> TransactionIndex::outgoing(const Address& sender) const {
    auto it = by_sender_.find(sender);
    if (it == by_sender_.end()) return {};
    return it->second;
}

FlowGraph trace_flows(const Transaction& seed, const TransactionIndex& corpus, unsigned k,
                      const std::map<Address, AddressCategory>& categories) {
    FlowGraph graph;
    graph.max_hops = k;
    if (k == 0) return graph;

    auto categorize = [&](const Address& a) {
        auto it = categories.find(a);
        graph.nodes.emplace(a, it == categories.end() ? AddressCategory::OtherUnknown : it->second);
    };
    std::set<std::pair<Hash32, std::uint64_t>> seen_events;
    std::set<Address> expanded;
    std::vector<Address> frontier;

    auto add_edge = [&](const Transaction& tx, const TraceEvent& e, unsigned depth) {
        if (!seen_events.emplace(tx.hash, e.index).second) return;
        FlowEdge edge{transfer_sender(tx, e), *e.to, e.token, e.amount, depth, tx.hash, e.index};
        categorize(edge.from);
        categorize(edge.to);
        if (!expanded.count(edge.to)) frontier.push_back(edge.to);
        graph.edges.push_back(std::move(edge));
    };

    for (const auto& e : seed.events) {
        if (is_value_transfer(e)) add_edge(seed, e, 1);
    }
    for (const auto& e : graph.edges) expanded.insert(e.from);

    for (unsigned depth = 2; depth <= k && !frontier.empty(); ++depth) {
        std::vector<Address> current;
        current.swap(frontier);
        for (const auto& addr : current) {
            if (!expanded.insert(addr).second) continue;
            for (const auto& ref : corpus.outgoing(addr)) add_edge(*ref.tx, ref.tx->events[ref.event], depth);
        }
    }
    return graph;
}

}  // namespace mevforge
