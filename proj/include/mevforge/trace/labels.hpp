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

#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

namespace mevforge {

/// Builder identities keyed by address. Construction rejects any address that
/// appears more than once.
class LabelSet {
  public:
    LabelSet() = default;
    explicit LabelSet(std::vector<BuilderLabel> labels);

    /// Reads `brand,instance,address` rows. A leading header row whose first
    /// column is "brand" is skipped, as are blank lines and `#` comments.
    static LabelSet load(std::istream& in);

    std::optional<BuilderLabel> find(const Address& address) const;

    const std::vector<BuilderLabel>& labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return labels_.size(); }

  private:
    std::vector<BuilderLabel> labels_;
    std::unordered_map<Address, std::size_t> by_address_;
};

std::optional<BuilderLabel> label_builder(const Address& address, const LabelSet& labels);

}  // namespace mevforge
