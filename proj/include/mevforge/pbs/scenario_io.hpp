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

#include "mevforge/pbs/campaign.hpp"

#include <filesystem>
#include <iosfwd>

namespace mevforge::pbs {

/// Reads a scenario JSON document. Relative fixture paths inside `pools` are
/// resolved against `base_dir`. Every problem found (unknown keys, bad
/// values) is collected and reported in one ConfigError.
Scenario load_scenario(std::istream& in, const std::filesystem::path& base_dir = {});
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace mevforge::pbs
