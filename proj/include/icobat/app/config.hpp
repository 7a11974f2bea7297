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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icobat/model.hpp"
#include "json.hpp"

namespace icobat::app {

/// Invalid or inconsistent run configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Engine { Numeric, Analytic, Both };

Engine parse_engine(std::string_view name);
std::string_view engine_name(Engine engine);

/// "2,3,4,5" -> {2, 3, 4, 5}.
std::vector<int> parse_n_list(std::string_view text);

struct SweepConfig {
    std::vector<int> n_list{2, 3, 4, 5};
    double omega = 1.0;
    double lambda = 0.1;
    double t_min = 0.0;
    std::optional<double> t_max;  ///< defaults to 4*pi/(omega*lambda)
    int points = 400;
    Engine engine = Engine::Both;
    std::optional<std::uint64_t> shots;
    std::optional<double> depolarizing_p;
    std::uint64_t seed = 20240917;
    std::string output;  ///< empty means stdout
    double tau = 0.5;
    double eps_dco = 1e-9;

    double resolved_t_max() const;
    /// points uniformly spaced values from t_min to t_max inclusive.
    std::vector<double> grid() const;
    ModelParams params(int n) const;

    /// Throws ConfigError.
    void validate() const;
};

/// Overlays the keys present in `doc` onto `base`. Unknown keys and wrong
/// types raise ConfigError.
SweepConfig merge_json(const nlohmann::json& doc, SweepConfig base = {});
SweepConfig load_config_file(const std::filesystem::path& path, SweepConfig base = {});

}  // namespace icobat::app
