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
#include <string>
#include <vector>

#include "icobat/app/config.hpp"
#include "icobat/circuit.hpp"
#include "json.hpp"

namespace icobat::app {

/// One (N, t) grid point. Energies in units of hbar*omega.
struct SweepRow {
    int n = 0;
    double t = 0.0;
    double E = 0.0;
    double W_ico = 0.0;
    std::optional<double> P_ico;
    double W_dco = 0.0;
    std::optional<double> P_dco;
    double p1 = 0.0;
    bool passive_k1 = true;
    bool passive_dco = true;
    std::optional<double> max_engine_dev;  ///< set by the `both` engine only
};

struct Violation {
    int n = 0;
    double t = 0.0;
    std::string what;
};

struct SweepTable {
    std::vector<SweepRow> rows;  ///< ordered by position in N list, then by t
    std::vector<Violation> violations;
};

SweepRow numeric_row(const ModelParams& params, double t);
SweepRow analytic_row(const ModelParams& params, double t);

/// Largest absolute difference over E, W_ico, W_dco, p1 and the efficiencies
/// defined in both rows; infinite if only one side defines an efficiency.
double engine_deviation(const SweepRow& a, const SweepRow& b);

/// Evaluates every grid point in parallel and records violations of engine
/// agreement and daemonic dominance.
SweepTable sweep(const SweepConfig& config);
std::string sweep_csv(const SweepTable& table, bool with_deviation);

struct BurstInterval {
    double t_start = 0.0;
    double t_end = 0.0;
    double max_p_ico = 0.0;
};

struct BurstSeries {
    int n = 0;
    double t_star = 0.0;  ///< end of the first window where P_dco vanishes
    std::vector<BurstInterval> intervals;
    double total_duration = 0.0;
    double first_window_duration = 0.0;  ///< part of total_duration with t <= t_star
    double max_p_ico = 0.0;
    bool inside_dco_windows = true;  ///< every interval sits inside a zero-P_dco window
};

struct BurstReport {
    double tau = 0.5;
    double eps_dco = 1e-9;
    double grid_step = 0.0;
    std::vector<BurstSeries> series;
    std::string monotonic;  ///< "pass", "fail", or "n/a" for fewer than two N

    bool consistent() const;
};

/// Maximal runs of rows (same N, grid order) with P_dco <= eps_dco and P_ico >= tau.
std::vector<BurstInterval> extract_intervals(const std::vector<SweepRow>& rows, double tau, double eps_dco);

BurstReport bursts(const SweepConfig& config, const SweepTable& table);
nlohmann::json to_json(const BurstReport& report);

struct ManifestRow {
    double t = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    std::string filename;
};

std::string qasm_filename(std::size_t index);

/// Writes one QASM file per grid point and manifest.csv into `dir`.
std::vector<ManifestRow> export_circuits(const SweepConfig& config, const std::filesystem::path& dir);
std::string manifest_csv(const std::vector<ManifestRow>& rows);

struct NoiseRow {
    double t = 0.0;
    circuit::Angles angles;
    double E = 0.0;  ///< ideal, noiseless
    double W_ico = 0.0;
    std::optional<double> P_ico;
    circuit::ShotResult counts;
    circuit::ShotEstimate estimate;
    bool overestimate = false;  ///< estimated E above ideal E
};

/// Samples the noisy two-charger circuit at every grid point with a per-point seed.
std::vector<NoiseRow> noise_study(const SweepConfig& config);
std::string noise_csv(const std::vector<NoiseRow>& rows);
std::string counts_csv(const std::vector<NoiseRow>& rows);

}  // namespace icobat::app
