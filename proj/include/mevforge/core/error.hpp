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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mevforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition or a structural invariant.
struct ContractViolation : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct LookupError : Error {
    using Error::Error;
};

struct MissingPriceError : Error {
    explicit MissingPriceError(const std::string& symbol)
        : Error("missing price for token " + symbol), symbol_(symbol) {}

    const std::string& symbol() const noexcept { return symbol_; }

  private:
    std::string symbol_;
};

/// Swap output rounded down to zero.
struct DustError : Error {
    using Error::Error;
};

struct InactivePoolError : Error {
    using Error::Error;
};

struct InsufficientDataError : Error {
    using Error::Error;
};

struct EmptyMarketError : Error {
    using Error::Error;
};

struct UndefinedCorrelationError : Error {
    using Error::Error;
};

}  // namespace mevforge
