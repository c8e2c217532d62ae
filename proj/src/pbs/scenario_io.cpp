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

#include "mevforge/pbs/scenario_io.hpp"

#include "mevforge/amm/pool_io.hpp"
#include "mevforge/core/error.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <set>

namespace mevforge::pbs {

namespace {

using json = nlohmann::json;

class Reader {
  public:
    explicit Reader(std::filesystem::path base) : base_(std::move(base)) {}

    void field(const json& obj, const std::string& path, const char* key, const std::function<void(const json&)>& fn,
               bool required = false) {
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) errors_.push_back(path + key + ": missing");
            return;
        }
        try {
            fn(*it);
        } catch (const std::exception& e) {
            errors_.push_back(path + key + ": " + e.what());
        }
    }

    void allow(const json& obj, const std::string& path, std::set<std::string> keys) {
        for (const auto& [k, v] : obj.items()) {
            if (!keys.count(k)) errors_.push_back(path + k + ": unknown key");
        }
    }

    void fail(const std::string& msg) { errors_.push_back(msg); }

    const std::vector<std::string>& errors() const { return errors_; }
    const std::filesystem::path& base() const { return base_; }

  private:
    std::filesystem::path base_;
    std::vector<std::string> errors_;
};

Rational rational(const json& j) {
    if (j.is_number_integer() || j.is_number_float()) return parse_rational(j.dump());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ConfigError("expected a number");
}

Amount amount(const json& j) {
    if (j.is_number_unsigned()) return Amount(j.get<std::uint64_t>());
    if (j.is_string()) return parse_amount(j.get<std::string>());
    throw ConfigError("expected a non-negative integer");
}

template <class T>
T integer(const json& j) {
    if (!j.is_number_unsigned()) throw ConfigError("expected a non-negative integer");
    return j.get<T>();
}

void read_builder(Reader& r, const json& j, const std::string& path, BuilderAgent& b) {
    if (!j.is_object()) {
        r.fail(path + ": expected an object");
        return;
    }
    r.allow(j, path, {"id", "latency_ms", "strategy", "share_ratio_bp", "infra_tier", "non_delivery_prob", "jitter_ms"});
    r.field(j, path, "id", [&](const json& v) { b.id = v.get<std::string>(); }, true);
    r.field(j, path, "latency_ms", [&](const json& v) { b.latency_ms = rational(v); }, true);
    r.field(j, path, "strategy", [&](const json& v) { b.strategy = parse_strategy(v.get<std::string>()); });
    r.field(j, path, "share_ratio_bp", [&](const json& v) { b.share_ratio_bp = integer<std::uint32_t>(v); });
    r.field(j, path, "infra_tier", [&](const json& v) { b.infra_tier = rational(v); });
    r.field(j, path, "non_delivery_prob", [&](const json& v) { b.non_delivery_prob = v.get<double>(); });
    r.field(j, path, "jitter_ms", [&](const json& v) { b.jitter_ms = rational(v); });
}

template <class F>
auto with_file(const std::filesystem::path& path, F&& fn) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return fn(in);
}

}  // namespace

Scenario load_scenario(std::istream& in, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("scenario: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("scenario: expected a JSON object");

    Scenario s;
    Reader r(base_dir);
    r.allow(doc, "", {"protocol", "horizon_ms", "base_compute_ms", "builders", "opportunity", "proposers", "relay",
                      "pools"});
    r.field(doc, "", "protocol", [&](const json& v) { s.protocol = parse_protocol(v.get<std::string>()); }, true);
    r.field(doc, "", "horizon_ms", [&](const json& v) { s.horizon_ms = rational(v); }, true);
    r.field(doc, "", "base_compute_ms", [&](const json& v) { s.base_compute_ms = rational(v); });
    r.field(
        doc, "", "builders",
        [&](const json& v) {
            if (!v.is_array()) throw ConfigError("expected an array");
            for (std::size_t i = 0; i < v.size(); ++i) {
                BuilderAgent b;
                read_builder(r, v[i], "builders[" + std::to_string(i) + "].", b);
                s.builders.push_back(std::move(b));
            }
        },
        true);
    r.field(
        doc, "", "opportunity",
        [&](const json& v) {
            const std::string p = "opportunity.";
            auto& o = s.opportunity;
            r.allow(v, p, {"birth_ms", "decay", "knee_ms", "deadline_ms", "peak_value", "gas_floor", "epsilon",
                           "peak_jitter_bp"});
            r.field(v, p, "birth_ms", [&](const json& x) { o.birth_ms = rational(x); });
            r.field(v, p, "decay", [&](const json& x) { o.decay = parse_decay(x.get<std::string>()); });
            r.field(v, p, "knee_ms", [&](const json& x) { o.knee_ms = rational(x); });
            r.field(v, p, "deadline_ms", [&](const json& x) { o.deadline_ms = rational(x); });
            r.field(v, p, "peak_value", [&](const json& x) { o.peak_value = amount(x); });
            r.field(v, p, "gas_floor", [&](const json& x) { o.gas_floor = amount(x); }, true);
            r.field(v, p, "epsilon", [&](const json& x) { o.epsilon = amount(x); });
            r.field(v, p, "peak_jitter_bp", [&](const json& x) { s.peak_jitter_bp = integer<std::uint32_t>(x); });
        },
        true);
    r.field(doc, "", "proposers", [&](const json& v) {
        const std::string p = "proposers.";
        r.allow(v, p, {"count", "rotation", "listen_window_ms", "blacklist_slots"});
        r.field(v, p, "count", [&](const json& x) { s.proposer_count = integer<std::size_t>(x); });
        r.field(v, p, "rotation", [&](const json& x) {
            if (x.get<std::string>() != "round_robin") throw ConfigError("only round_robin rotation is supported");
        });
        r.field(v, p, "listen_window_ms", [&](const json& x) { s.proposer.listen_window_ms = rational(x); });
        r.field(v, p, "blacklist_slots", [&](const json& x) { s.proposer.blacklist_slots = integer<std::uint64_t>(x); });
    });
    r.field(doc, "", "relay", [&](const json& v) {
        const std::string p = "relay.";
        r.allow(v, p, {"rebid_interval_ms", "relay_delay_ms"});
        r.field(v, p, "rebid_interval_ms", [&](const json& x) { s.relay.rebid_interval_ms = rational(x); });
        r.field(v, p, "relay_delay_ms", [&](const json& x) { s.relay.relay_delay_ms = rational(x); });
    });
    r.field(doc, "", "pools", [&](const json& v) {
        const std::string p = "pools.";
        EmbodiedConfig e;
        r.allow(v, p, {"fixture", "descriptor", "drift_bp", "search_hi"});
        r.field(
            v, p, "fixture",
            [&](const json& x) {
                e.pools = with_file(r.base() / x.get<std::string>(), [](std::istream& f) { return load_pools(f); });
            },
            true);
        r.field(
            v, p, "descriptor",
            [&](const json& x) {
                e.descriptor =
                    with_file(r.base() / x.get<std::string>(), [](std::istream& f) { return load_descriptor(f); });
            },
            true);
        r.field(v, p, "drift_bp", [&](const json& x) { e.drift_bp = integer<std::uint32_t>(x); });
        r.field(v, p, "search_hi", [&](const json& x) { e.search_hi = amount(x); }, true);
        s.embodied = std::move(e);
    });

    if (r.errors().empty()) {
        try {
            s.validate();
        } catch (const Error& e) {
            r.fail(e.what());
        }
    }
    if (!r.errors().empty()) {
        std::string msg = "invalid scenario:";
        for (const auto& e : r.errors()) msg += "\n  " + e;
        throw ConfigError(msg);
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    return with_file(path, [&](std::istream& in) { return load_scenario(in, path.parent_path()); });
}

}  // namespace mevforge::pbs
