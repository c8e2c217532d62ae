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

#include "mevforge/core/numeric.hpp"

#include <cstdint>
#include <random>

namespace mevforge {

/// Seeded generator whose draws are identical on every standard library:
/// the engine is fully specified and the range mappings below are ours
/// (std::uniform_*_distribution output is implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        if (span == 0) return next();  // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x = 0;
        do {
            x = next();
        } while (x >= limit);
        return lo + x % span;
    }

    /// Uniform in [0, 1) with 53 bits of resolution.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    /// Uniform arbitrary-precision integer in [lo, hi].
    Amount uniform(const Amount& lo, const Amount& hi) {
        const Amount span = hi - lo + 1;
        Amount x = 0;
        Amount range = 1;
        while (range < span * 1024) {
            x = (x << 64) | Amount(next());
            range <<= 64;
        }
        return lo + x % span;
    }

    /// Deterministic child seed for an indexed sub-stream.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace mevforge
