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

#include "mevforge/trace/types.hpp"

#include "mevforge/core/error.hpp"

namespace mevforge {

void TokenId::validate() const {
    if (symbol.empty()) throw ContractViolation("token symbol is empty");
    if (decimals > 36) throw ContractViolation("token " + symbol + " has more than 36 decimals");
}

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Swap: return "swap";
        case EventKind::Sync: return "sync";
        case EventKind::Transfer: return "transfer";
        case EventKind::InternalTxn: return "internal";
    }
    return "unknown";
}

void TraceEvent::validate() const {
    if (amount_in < 0 || amount_out < 0 || amount < 0) throw ContractViolation("negative event amount");
    switch (kind) {
        case EventKind::Swap:
            if (!pool || !token_in || !token_out) throw ContractViolation("swap requires pool, token_in and token_out");
            if (*token_in == *token_out) throw ContractViolation("swap token_in equals token_out");
            token_in->validate();
            token_out->validate();
            break;
        case EventKind::Transfer:
        case EventKind::InternalTxn:
            if (!to) throw ContractViolation(std::string(to_string(kind)) + " requires a recipient");
            if (token) token->validate();
            break;
        case EventKind::Sync:
            break;
    }
}

void Transaction::validate() const {
    if (gas_used < 0 || gas_price < 0) throw ContractViolation("negative gas field");
    for (std::size_t i = 0; i < events.size(); ++i) {
        events[i].validate();
        if (i > 0 && events[i].index <= events[i - 1].index) {
            throw ContractViolation("event indices not strictly increasing at position " + std::to_string(i));
        }
    }
}

void PathDescriptor::validate() const {
    const auto n = pools.size();
    if (n == 0) throw ContractViolation("path descriptor has no pools");
    if (tokens.size() != n + 1 || pool_type_flags.size() != n || direction_flags.size() != n) {
        throw ContractViolation("path descriptor lengths disagree: tokens=" + std::to_string(tokens.size()) +
                                " pools=" + std::to_string(n) + " flags=" + std::to_string(pool_type_flags.size()) +
                                " dirs=" + std::to_string(direction_flags.size()));
    }
}

}  // namespace mevforge
