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

#include "mevforge/ingest/commands.hpp"

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include <iostream>

namespace {

namespace fs = std::filesystem;
using namespace mevforge;

enum Exit { kOk = 0, kErrorRows = 1, kUsage = 2, kFailure = 3 };

ingest::RunConfig config_from(const std::string& path) {
    return path.empty() ? ingest::RunConfig{} : ingest::load_config(path);
}

}  // namespace

int main(int argc, char** argv) {
    ingest::init_logging();

    CLI::App app{"mevforge: arbitrage extraction, PBS simulation and builder-market analytics"};
    app.require_subcommand(1);

    std::string traces, labels, config, out, records, blocks, scenario, kind, profile = "random";
    std::uint64_t slots = 0, seed = 0;
    std::size_t count = 0;

    auto* extract = app.add_subcommand("extract", "Extract arbitrage records from a trace file");
    extract->add_option("--traces", traces, "Newline-delimited JSON trace file")->required();
    extract->add_option("--labels", labels, "Builder label CSV (brand,instance,address)")->required();
    extract->add_option("--config", config, "Run configuration file");
    extract->add_option("--out", out, "Output directory")->required();

    auto* analyze = app.add_subcommand("analyze", "Aggregate records into report tables");
    analyze->add_option("--records", records, "Records CSV written by extract")->required();
    analyze->add_option("--config", config, "Run configuration file");
    analyze->add_option("--blocks", blocks, "Block counts per brand (brand,blocks[,validators])");
    analyze->add_option("--out", out, "Output directory")->required();

    auto* simulate = app.add_subcommand("simulate", "Run a PBS campaign");
    simulate->add_option("--scenario", scenario, "Scenario JSON")->required();
    simulate->add_option("--slots", slots, "Number of slots")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed, "Random seed")->required();
    simulate->add_option("--out", out, "Output directory")->required();

    auto* gen = app.add_subcommand("gen-fixtures", "Write seeded synthetic fixtures with a manifest");
    gen->add_option("--kind", kind, "traces, pools, records or scenario")->required();
    gen->add_option("--seed", seed, "Random seed")->required();
    gen->add_option("--out", out, "Output directory")->required();
    gen->add_option("--profile", profile, "Records profile: random or token-split");
    gen->add_option("--count", count, "Transactions or records to generate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*extract) {
            auto s = ingest::cmd_extract(traces, labels, config_from(config), out);
            std::cout << "transactions=" << s.transactions << " records=" << s.records << " skipped=" << s.skipped
                      << " errors=" << s.error_rows << " unknown_events=" << s.unknown_events << '\n';
            return s.error_rows > 0 ? kErrorRows : kOk;
        }
        if (*analyze) {
            std::optional<fs::path> block_path;
            if (!blocks.empty()) block_path = blocks;
            auto s = ingest::cmd_analyze(records, config_from(config), out, block_path);
            std::cout << "records=" << s.records << " skipped_error_rows=" << s.skipped_error_rows << '\n';
            return kOk;
        }
        if (*simulate) {
            auto s = ingest::cmd_simulate(scenario, slots, seed, out);
            std::cout << "slots=" << s.slots << " fallbacks=" << s.fallbacks << '\n';
            return kOk;
        }
        if (*gen) {
            ingest::cmd_gen_fixtures(kind, seed, out, profile, count);
            return kOk;
        }
    } catch (const ingest::UsageError& e) {
        spdlog::error("{}", e.what());
        return kUsage;
    } catch (const ConfigError& e) {
        spdlog::error("{}", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return kFailure;
    }
    return kOk;
}
