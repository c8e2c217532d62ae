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

#include "mevforge/core/error.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace mevforge {

namespace detail {

inline int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace detail

/// Fixed-width byte identifier (addresses, hashes). Stored decoded and
/// rendered as lowercase 0x-prefixed hex.
template <std::size_t N, class Tag>
class FixedBytes {
  public:
    static constexpr std::size_t size = N;

    constexpr FixedBytes() = default;
    constexpr explicit FixedBytes(const std::array<std::uint8_t, N>& bytes) : bytes_(bytes) {}

    static FixedBytes from_hex(std::string_view text) {
        if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) text.remove_prefix(2);
        if (text.size() != 2 * N) {
            throw ContractViolation("expected " + std::to_string(N) + " hex bytes, got '" + std::string(text) + "'");
        }
        std::array<std::uint8_t, N> out{};
        for (std::size_t i = 0; i < N; ++i) {
            int hi = detail::hex_nibble(text[2 * i]);
            int lo = detail::hex_nibble(text[2 * i + 1]);
            if (hi < 0 || lo < 0) throw ContractViolation("invalid hex digit in '" + std::string(text) + "'");
            out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
        }
        return FixedBytes(out);
    }

    std::string hex() const {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out = "0x";
        out.reserve(2 + 2 * N);
        for (auto b : bytes_) {
            out.push_back(digits[b >> 4]);
            out.push_back(digits[b & 0xf]);
        }
        return out;
    }

    const std::array<std::uint8_t, N>& bytes() const noexcept { return bytes_; }

    friend constexpr auto operator<=>(const FixedBytes&, const FixedBytes&) = default;

  private:
    std::array<std::uint8_t, N> bytes_{};
};

struct AddressTag {};
struct Hash32Tag {};

using Address = FixedBytes<20, AddressTag>;
using Hash32 = FixedBytes<32, Hash32Tag>;

/// 0xffff…fffe, the validator-income endpoint observed in builder traces.
inline const Address& validator_income_address() {
    static const Address addr = Address::from_hex("0xfffffffffffffffffffffffffffffffffffffffe");
    return addr;
}

}  // namespace mevforge

template <std::size_t N, class Tag>
struct std::hash<mevforge::FixedBytes<N, Tag>> {
    std::size_t operator()(const mevforge::FixedBytes<N, Tag>& v) const noexcept {
        // FNV-1a
        std::size_t h = 1469598103934665603ull;
        for (auto b : v.bytes()) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};
