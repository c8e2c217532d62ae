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

#include "mevforge/trace/labels.hpp"

#include "mevforge/core/error.hpp"

#include <boost/algorithm/string.hpp>

#include <istream>
#include <string>

namespace mevforge {

LabelSet::LabelSet(std::vector<BuilderLabel> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        auto [it, inserted] = by_address_.emplace(labels_[i].address, i);
        if (!inserted) {
            const auto& prior = labels_[it->second];
            throw ConfigError("address " + labels_[i].address.hex() + " labeled twice (" + prior.brand + "/" +
                              prior.instance_name + " and " + labels_[i].brand + "/" + labels_[i].instance_name + ")");
        }
    }
}

LabelSet LabelSet::load(std::istream& in) {
    std::vector<BuilderLabel> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        boost::algorithm::trim(line);
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> cols;
        boost::algorithm::split(cols, line, boost::is_any_of(","));
        for (auto& c : cols) boost::algorithm::trim(c);
        if (labels.empty() && !cols.empty() && boost::algorithm::iequals(cols[0], "brand")) continue;
        if (cols.size() != 3) throw ParseError(line_no, "label row needs 3 columns, got " + std::to_string(cols.size()));
        try {
            labels.push_back(BuilderLabel{cols[0], cols[1], Address::from_hex(cols[2])});
        } catch (const ContractViolation& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return LabelSet(std::move(labels));
}

std::optional<BuilderLabel> LabelSet::find(const Address& address) const {
    auto it = by_address_.find(address);
    if (it == by_address_.end()) return std::nullopt;
    return labels_[it->second];
}

std::optional<BuilderLabel> label_builder(const Address& address, const LabelSet& labels) {
    return labels.find(address);
}

}  // namespace mevforge
