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

#include "mevforge/amm/pool_io.hpp"
#include "mevforge/analytics/report.hpp"
#include "mevforge/arb/cycle.hpp"
#include "mevforge/core/rng.hpp"
#include "mevforge/ingest/fixtures.hpp"
#include "mevforge/pbs/scenario_io.hpp"
#include "mevforge/trace/trace_io.hpp"

#include <boost/algorithm/string.hpp>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <set>

namespace mevforge::ingest {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::ifstream open_in(const fs::path& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + what + " " + path.string());
    return in;
}

std::ofstream open_out(const fs::path& dir, const char* name) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + (dir / name).string());
    return out;
}

void close(std::ofstream& out, const fs::path& dir, const char* name) {
    out.close();
    if (!out) throw IoError("failed writing " + (dir / name).string());
}

std::string join_path(const ArbitrageCycle& c) {
    std::string s = c.base_token.symbol;
    for (const auto& h : c.path) s += ">" + h.token_out.symbol;
    return s;
}

std::string join_pools(const ArbitrageCycle& c) {
    std::string s;
    for (const auto& h : c.path) s += (s.empty() ? "" : ">") + h.pool.hex();
    return s;
}

ArbitrageRecord make_record(const Transaction& tx, const ArbitrageCycle& cycle, const LabelSet& labels,
                            const RunConfig& cfg) {
    ArbitrageRecord r;
    r.tx_hash = tx.hash;
    r.block_number = tx.block_number;
    r.builder_brand = brand_of(tx, labels);
    r.base_token = cycle.base_token;
    r.hop_count = cycle.hop_count();
    r.timestamp = tx.timestamp;
    try {
        ProfitBreakdown b = attribute_profit(tx, cycle, cfg.share_addresses, &cfg.prices);
        normalize_usd(b, cfg.prices);
        r.gross = b.gross;
        r.share = b.share;
        r.gas = b.gas_in_base;
        r.net = b.net;
        r.usd_value = *b.usd_value;
        r.share_usd = *b.share_usd;
    } catch (const MissingPriceError& e) {
        r.error = e.what();
    }
    return r;
}

void write_flows(std::ostream& out, const Hash32& tx, const FlowGraph& g) {
    for (const auto& e : g.edges) {
        auto cat = g.nodes.find(e.to);
        out << tx.hex() << ',' << e.depth << ',' << e.from.hex() << ',' << e.to.hex() << ','
            << (e.token ? e.token->symbol : std::string("native")) << ',' << e.amount << ','
            << to_string(cat != g.nodes.end() ? cat->second : AddressCategory::OtherUnknown) << '\n';
    }
}

std::vector<analytics::BrandCount> load_block_counts(const fs::path& path) {
    auto in = open_in(path, "block counts");
    std::vector<analytics::BrandCount> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        boost::trim(line);
        if (line.empty() || line[0] == '#' || (lineno == 1 && boost::starts_with(line, "brand"))) continue;
        std::vector<std::string> f;
        boost::split(f, line, boost::is_any_of(","));
        if (f.size() < 2 || f.size() > 3) throw ParseError(lineno, "expected brand,blocks[,validators]");
        try {
            analytics::BrandCount c;
            c.brand = boost::trim_copy(f[0]);
            c.blocks = static_cast<std::uint64_t>(parse_amount(boost::trim_copy(f[1])));
            if (f.size() == 3) c.validators = static_cast<std::uint64_t>(parse_amount(boost::trim_copy(f[2])));
            out.push_back(std::move(c));
        } catch (const ContractViolation& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return out;
}

ordered_json planted_json(const PlantedCycle& p) {
    ordered_json j;
    j["tx_hash"] = p.tx_hash.hex();
    j["path"] = p.path;
    ordered_json pools = ordered_json::array();
    for (const auto& a : p.pools) pools.push_back(a.hex());
    j["pools"] = std::move(pools);
    j["gross"] = p.gross.str();
    j["share"] = p.share.str();
    j["net"] = p.net.str();
    return j;
}

ordered_json token_json(const TokenId& t) {
    ordered_json j;
    j["symbol"] = t.symbol;
    j["address"] = t.address.hex();
    j["decimals"] = t.decimals;
    return j;
}

ordered_json random_scenario(std::uint64_t seed) {
    Rng rng(seed);
    ordered_json s;
    s["protocol"] = rng.bernoulli(0.5) ? "bsc" : "eth";
    s["horizon_ms"] = s["protocol"] == "bsc" ? 3000 : 12000;
    s["base_compute_ms"] = 10;
    const char* strategies[] = {"short_hop", "long_hop", "mixed"};
    ordered_json builders = ordered_json::array();
    const std::uint64_t n = rng.uniform(2, 4);
    for (std::uint64_t i = 0; i < n; ++i) {
        ordered_json b;
        b["id"] = "builder-" + std::to_string(i + 1);
        b["latency_ms"] = rng.uniform(5, 150);
        b["strategy"] = strategies[rng.uniform(0, 2)];
        b["share_ratio_bp"] = rng.uniform(0, 5000);
        b["infra_tier"] = std::to_string(rng.uniform(80, 150)) + "/100";
        b["non_delivery_prob"] = static_cast<double>(rng.uniform(0, 5)) / 1000.0;
        b["jitter_ms"] = rng.uniform(0, 10);
        builders.push_back(std::move(b));
    }
    s["builders"] = std::move(builders);
    ordered_json o;
    o["decay"] = "piecewise";
    o["knee_ms"] = 100;
    o["deadline_ms"] = 200;
    o["peak_value"] = (Amount(rng.uniform(1, 50)) * pow10(17)).str();
    o["gas_floor"] = pow10(15).str();
    o["peak_jitter_bp"] = 2000;
    s["opportunity"] = std::move(o);
    ordered_json p;
    p["count"] = 21;
    p["rotation"] = "round_robin";
    p["listen_window_ms"] = 50;
    p["blacklist_slots"] = 100;
    s["proposers"] = std::move(p);
    ordered_json r;
    r["rebid_interval_ms"] = 500;
    r["relay_delay_ms"] = 0;
    s["relay"] = std::move(r);
    return s;
}

}  // namespace

std::string brand_of(const Transaction& tx, const LabelSet& labels) {
    if (auto l = labels.find(tx.initiator)) return l->brand;
    for (const auto& e : tx.events) {
        if ((e.kind == EventKind::InternalTxn || e.kind == EventKind::Transfer) && e.to) {
            if (auto l = labels.find(*e.to)) return l->brand;
        }
    }
    return std::string(kUnlabeled);
}

ExtractSummary extract_stream(std::istream& traces, const LabelSet& labels, const RunConfig& config,
                              RecordWriter& records, std::ostream* paths) {
    ExtractSummary s;
    TraceReader reader(traces, {config.infer_pool_sink});
    if (paths) *paths << "tx_hash,path,pools\n";
    while (auto tx = reader.next()) {
        ++s.transactions;
        auto cycle = extract_arbitrage_cycle(*tx);
        if (!cycle) {
            ++s.skipped;
            continue;
        }
        auto r = make_record(*tx, *cycle, labels, config);
        if (r.ok()) ++s.records;
        else ++s.error_rows;
        records.write(r);
        if (paths) *paths << tx->hash.hex() << ',' << join_path(*cycle) << ',' << join_pools(*cycle) << '\n';
    }
    s.unknown_events = reader.stats().unknown_events;
    return s;
}

ExtractSummary cmd_extract(const fs::path& traces, const fs::path& labels_path, const RunConfig& config,
                           const fs::path& out_dir) {
    auto labels_in = open_in(labels_path, "labels");
    const LabelSet labels = LabelSet::load(labels_in);
    auto in = open_in(traces, "traces");

    auto rec_out = open_out(out_dir, "records.csv");
    auto path_out = open_out(out_dir, "paths.csv");
    RecordWriter writer(rec_out);
    ExtractSummary s;

    if (!config.trace_flows) {
        s = extract_stream(in, labels, config, writer, &path_out);
    } else {
        TraceParseStats stats;
        const auto corpus = parse_trace_file(in, {config.infer_pool_sink}, &stats);
        const TransactionIndex index(corpus);
        auto flow_out = open_out(out_dir, "flows.csv");
        flow_out << "tx_hash,depth,from,to,token,amount,to_category\n";
        path_out << "tx_hash,path,pools\n";
        for (const auto& tx : corpus) {
            ++s.transactions;
            auto cycle = extract_arbitrage_cycle(tx);
            if (!cycle) {
                ++s.skipped;
                continue;
            }
            auto r = make_record(tx, *cycle, labels, config);
            if (r.ok()) ++s.records;
            else ++s.error_rows;
            writer.write(r);
            path_out << tx.hash.hex() << ',' << join_path(*cycle) << ',' << join_pools(*cycle) << '\n';
            write_flows(flow_out, tx.hash, trace_flows(tx, index, config.k_hops, config.categories));
        }
        s.unknown_events = stats.unknown_events;
        close(flow_out, out_dir, "flows.csv");
    }
    close(rec_out, out_dir, "records.csv");
    close(path_out, out_dir, "paths.csv");
    spdlog::info("extract: {} transactions, {} records, {} skipped, {} error rows", s.transactions, s.records,
                 s.skipped, s.error_rows);
    return s;
}

AnalyzeSummary cmd_analyze(const fs::path& records_path, const RunConfig& config, const fs::path& out_dir,
                           const std::optional<fs::path>& blocks) {
    using namespace analytics;
    auto in = open_in(records_path, "records");
    RecordReader reader(in);

    AnalyzeSummary s;
    std::vector<BrandedProfit> profits;
    std::vector<std::size_t> hops;
    std::vector<std::pair<std::size_t, Rational>> per_swap;
    std::map<std::string, std::set<std::uint64_t>> brand_blocks;
    std::map<std::string, std::vector<std::pair<std::int64_t, Rational>>> daily;
    while (auto r = reader.next()) {
        if (!r->ok()) {
            ++s.skipped_error_rows;
            continue;
        }
        ++s.records;
        profits.push_back({r->builder_brand, r->breakdown()});
        hops.push_back(r->hop_count);
        if (r->hop_count > 0) per_swap.emplace_back(r->hop_count, r->usd_value / static_cast<long long>(r->hop_count));
        brand_blocks[r->builder_brand].insert(r->block_number);
        if (r->timestamp) {
            daily["all.net_usd"].emplace_back(*r->timestamp, r->usd_value);
            daily["all.count"].emplace_back(*r->timestamp, Rational(1));
            daily[r->builder_brand + ".net_usd"].emplace_back(*r->timestamp, r->usd_value);
        }
    }
    if (s.skipped_error_rows > 0) spdlog::warn("analyze: skipped {} error rows", s.skipped_error_rows);

    std::vector<BrandCount> counts;
    if (blocks) {
        counts = load_block_counts(*blocks);
    } else {
        for (const auto& [brand, set] : brand_blocks) counts.push_back({brand, set.size(), 0});
    }
    ShareTable shares;
    if (!counts.empty()) {
        try {
            shares = market_share(counts);
        } catch (const EmptyMarketError&) {
        }
    }

    const auto matrix = profit_matrix(profits);
    const auto split = proposer_split(profits);
    const auto complexity = path_complexity(hops);

    std::vector<CorrelationRow> correlations;
    CorrelationRow corr{"hop_count~profit_per_swap_usd", per_swap.size(), std::nullopt};
    try {
        corr.value = pathlen_profit_correlation(per_swap);
    } catch (const UndefinedCorrelationError&) {
    }
    correlations.push_back(corr);

    std::vector<NamedTrend> trends;
    for (const auto& [name, obs] : daily) {
        auto [first, series] = daily_series(obs);
        if (series.size() < 3) continue;
        trends.push_back({name, first, mann_kendall(series, config.alpha)});
    }

    std::vector<RiskScore> risks;
    for (const auto& [symbol, bits] : config.risk) {
        risks.push_back(risk_score(TokenId{symbol, Address{}, 18}, bits.freezable, bits.custodial, bits.external_chain));
    }

    auto emit = [&](const char* name, auto&& writer) {
        auto out = open_out(out_dir, name);
        writer(out);
        close(out, out_dir, name);
    };
    emit("shares.csv", [&](std::ostream& o) { write_shares(o, shares); });
    emit("profit_matrix.csv", [&](std::ostream& o) { write_profit_matrix(o, matrix); });
    emit("token_shares.csv", [&](std::ostream& o) { write_token_shares(o, matrix); });
    emit("proposer_split.csv", [&](std::ostream& o) { write_proposer_split(o, split); });
    emit("path_histogram.csv", [&](std::ostream& o) { write_histogram(o, complexity); });
    emit("path_ecdf.csv", [&](std::ostream& o) { write_ecdf(o, complexity); });
    emit("correlations.csv", [&](std::ostream& o) { write_correlations(o, correlations); });
    emit("trends.csv", [&](std::ostream& o) { write_trends(o, trends); });
    emit("risk_scores.csv", [&](std::ostream& o) { write_risk_scores(o, risks); });
    spdlog::info("analyze: {} records", s.records);
    return s;
}

pbs::CampaignSummary cmd_simulate(const fs::path& scenario_path, std::uint64_t n_slots, std::uint64_t seed,
                                  const fs::path& out_dir) {
    const auto scenario = pbs::load_scenario(scenario_path);
    const auto result = pbs::run_campaign(scenario, n_slots, seed);

    auto log = open_out(out_dir, "slots.ndjson");
    pbs::write_slot_log(log, result.outcomes);
    close(log, out_dir, "slots.ndjson");
    auto summary = open_out(out_dir, "summary.csv");
    pbs::write_summary_csv(summary, result.summary);
    close(summary, out_dir, "summary.csv");
    auto campaign = open_out(out_dir, "campaign.csv");
    pbs::write_campaign_csv(campaign, result.summary);
    close(campaign, out_dir, "campaign.csv");
    return result.summary;
}

void cmd_gen_fixtures(const std::string& kind, std::uint64_t seed, const fs::path& out_dir, const std::string& profile,
                      std::size_t count) {
    ordered_json manifest;
    manifest["kind"] = kind;
    manifest["seed"] = seed;
    if (kind != "records" && profile != "random") throw UsageError("profiles only apply to records fixtures");

    if (kind == "traces") {
        TraceGenParams params;
        if (count > 0) params.tx_count = count;
        const auto corpus = generate_traces(params, seed);
        auto out = open_out(out_dir, "traces.ndjson");
        write_trace_file(out, corpus.transactions);
        close(out, out_dir, "traces.ndjson");
        ordered_json gen;
        gen["tx_count"] = params.tx_count;
        gen["cycle_fraction"] = params.cycle_fraction;
        gen["min_hops"] = params.min_hops;
        gen["max_hops"] = params.max_hops;
        gen["pool_sink_prob"] = params.pool_sink_prob;
        ordered_json shares = ordered_json::array();
        for (const auto& a : params.share_addresses) shares.push_back(a.hex());
        gen["share_addresses"] = std::move(shares);
        manifest["generator"] = std::move(gen);
        manifest["files"] = {"traces.ndjson"};
        ordered_json planted = ordered_json::array();
        for (const auto& p : corpus.planted) planted.push_back(planted_json(p));
        manifest["planted"] = std::move(planted);
    } else if (kind == "pools") {
        const auto fixture = generate_pools(seed);
        auto out = open_out(out_dir, "pools.json");
        write_pools(out, fixture.pools);
        close(out, out_dir, "pools.json");
        ordered_json d;
        d["tokens"] = ordered_json::array();
        for (const auto& t : fixture.descriptor.tokens) d["tokens"].push_back(token_json(t));
        d["pools"] = ordered_json::array();
        for (const auto& p : fixture.descriptor.pools) d["pools"].push_back(p.hex());
        d["pool_types"] = ordered_json::array();
        for (bool v2 : fixture.descriptor.pool_type_flags) d["pool_types"].push_back(v2 ? "v2" : "v3");
        d["directions"] = ordered_json::array();
        for (bool dir : fixture.descriptor.direction_flags) d["directions"].push_back(dir);
        auto dout = open_out(out_dir, "descriptor.json");
        dout << d.dump(2) << '\n';
        close(dout, out_dir, "descriptor.json");
        manifest["files"] = {"pools.json", "descriptor.json"};
    } else if (kind == "records") {
        std::vector<ArbitrageRecord> records;
        if (profile == "random") {
            const std::vector<std::string> brands = {"48Club", "Blockrazor", "Jetbldr", "Bloxroute", "Nodereal",
                                                     "Blocksmith"};
            records = generate_records(seed, count > 0 ? count : 1000, brands);
        } else if (profile == "token-split") {
            records = token_profit_fixture();
        } else {
            throw UsageError("unknown records profile '" + profile + "' (expected random or token-split)");
        }
        auto out = open_out(out_dir, "records.csv");
        write_records(out, records);
        close(out, out_dir, "records.csv");
        manifest["profile"] = profile;
        manifest["records"] = records.size();
        manifest["files"] = {"records.csv"};
    } else if (kind == "scenario") {
        auto out = open_out(out_dir, "scenario.json");
        out << random_scenario(seed).dump(2) << '\n';
        close(out, out_dir, "scenario.json");
        manifest["files"] = {"scenario.json"};
    } else {
        throw UsageError("unknown fixture kind '" + kind + "' (expected traces, pools, records or scenario)");
    }
    auto out = open_out(out_dir, "manifest.json");
    out << manifest.dump(2) << '\n';
    close(out, out_dir, "manifest.json");
}

void init_logging() {
    auto level = spdlog::level::warn;
    if (const char* env = std::getenv("MEVFORGE_LOG")) {
        auto parsed = spdlog::level::from_str(env);
        // from_str maps unknown names to off; only accept "off" when asked.
        if (parsed != spdlog::level::off || std::string_view(env) == "off") level = parsed;
    }
    spdlog::set_level(level);
}

}  // namespace mevforge::ingest
