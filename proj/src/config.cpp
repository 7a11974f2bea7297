// Copyright 2026 The icobat Authors
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

#include "icobat/app/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

namespace icobat::app {

Engine parse_engine(std::string_view name) {
    if (name == "numeric") return Engine::Numeric;
    if (name == "analytic") return Engine::Analytic;
    if (name == "both") return Engine::Both;
    throw ConfigError("engine must be numeric, analytic or both (got '" + std::string(name) + "')");
}

std::string_view engine_name(Engine engine) {
    switch (engine) {
        case Engine::Numeric: return "numeric";
        case Engine::Analytic: return "analytic";
        case Engine::Both: return "both";
    }
    return "?";
}

std::vector<int> parse_n_list(std::string_view text) {
    std::vector<int> out;
    while (!text.empty()) {
        const std::size_t comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size()) {
            throw ConfigError("bad charger count '" + std::string(item) + "' in N list");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty()) throw ConfigError("empty N list");
    return out;
}

double SweepConfig::resolved_t_max() const {
    return t_max ? *t_max : 4.0 * std::numbers::pi / (omega * lambda);
}

std::vector<double> SweepConfig::grid() const {
    const double hi = resolved_t_max();
    std::vector<double> out(static_cast<std::size_t>(points));
    const double step = (hi - t_min) / (points - 1);
    for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = t_min + i * step;
    out.back() = hi;
    return out;
}

ModelParams SweepConfig::params(int n) const { return ModelParams{n, omega, lambda}; }

void SweepConfig::validate() const {
    if (n_list.empty()) throw ConfigError("N list is empty");
    for (int n : n_list) {
        if (n < 2 || n > 8) throw ConfigError("charger count " + std::to_string(n) + " outside [2, 8]");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) throw ConfigError("omega must be positive");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ConfigError("lambda must be positive");
    if (!std::isfinite(t_min) || t_min < 0.0) throw ConfigError("t_min must be a non-negative number");
    if (!(t_min < resolved_t_max()) || !std::isfinite(resolved_t_max())) throw ConfigError("need t_min < t_max");
    if (points < 2) throw ConfigError("need at least 2 grid points");
    if (shots && *shots == 0) throw ConfigError("shots must be at least 1");
    if (depolarizing_p && !(*depolarizing_p >= 0.0 && *depolarizing_p <= 1.0)) {
        throw ConfigError("depolarizing_p must lie in [0, 1]");
    }
    if (!std::isfinite(tau) || !std::isfinite(eps_dco)) throw ConfigError("burst thresholds must be finite");
}

namespace {

template <typename T>
T get_as(const nlohmann::json& v, const std::string& key) {
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigError("config key '" + key + "' has the wrong type");
    }
}

}  // namespace

SweepConfig merge_json(const nlohmann::json& doc, SweepConfig base) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [key, v] : doc.items()) {
        if (key == "N_list") {
            base.n_list = get_as<std::vector<int>>(v, key);
        } else if (key == "omega") {
            base.omega = get_as<double>(v, key);
        } else if (key == "lambda") {
            base.lambda = get_as<double>(v, key);
        } else if (key == "t_min") {
            base.t_min = get_as<double>(v, key);
        } else if (key == "t_max") {
            base.t_max = get_as<double>(v, key);
        } else if (key == "points") {
            base.points = get_as<int>(v, key);
        } else if (key == "engine") {
            base.engine = parse_engine(get_as<std::string>(v, key));
        } else if (key == "shots") {
            if (!v.is_number_unsigned()) throw ConfigError("config key 'shots' must be a positive integer");
            base.shots = v.get<std::uint64_t>();
        } else if (key == "depolarizing_p") {
            base.depolarizing_p = get_as<double>(v, key);
        } else if (key == "seed") {
            if (!v.is_number_unsigned()) throw ConfigError("config key 'seed' must be a non-negative integer");
            base.seed = v.get<std::uint64_t>();
        } else if (key == "output") {
            base.output = get_as<std::string>(v, key);
        } else if (key == "tau") {
            base.tau = get_as<double>(v, key);
        } else if (key == "eps_dco") {
            base.eps_dco = get_as<double>(v, key);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return base;
}

SweepConfig load_config_file(const std::filesystem::path& path, SweepConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
    }
    return merge_json(doc, std::move(base));
}

}  // namespace icobat::app
