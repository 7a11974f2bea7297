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

#include "icobat/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <numbers>

#include "icobat/analytic.hpp"
#include "icobat/app/csv.hpp"
#include "icobat/protocol.hpp"
#include "icobat/qasm.hpp"
#include "icobat/thermo.hpp"
#include "icobat/tolerances.hpp"

namespace icobat::app {

namespace {

/// Runs body(i) for i in [0, count) on the OpenMP pool; the first exception
/// thrown by any worker is rethrown after the loop.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
    std::exception_ptr error;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(icobat_parallel_for_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

void require_two_chargers(const SweepConfig& config, const char* command) {
    if (config.n_list != std::vector<int>{2}) {
        throw ConfigError(std::string(command) + " supports only N = 2 (pass --n 2)");
    }
}

}  // namespace

SweepRow numeric_row(const ModelParams& params, double t) {
    const ProtocolResult result = run_ico(params, t);
    const ProtocolReport rep = report(result, params);
    SweepRow row;
    row.n = params.n_chargers;
    row.t = t;
    row.E = rep.ico.E;
    row.W_ico = rep.ico.W;
    row.P_ico = rep.ico.P;
    row.W_dco = rep.dco.W;
    row.P_dco = rep.dco.P;
    row.p1 = result.p1;
    row.passive_k1 = rep.ico.passive_k1;
    row.passive_dco = rep.dco.passive_dco;
    return row;
}

SweepRow analytic_row(const ModelParams& params, double t) {
    const analytic::ClosedFormReport r = analytic::closed_form_report(params, t);
    SweepRow row;
    row.n = params.n_chargers;
    row.t = t;
    row.E = r.E;
    row.W_ico = r.W_ico;
    row.P_ico = r.P_ico;
    row.W_dco = r.W_dco;
    row.P_dco = r.P_dco;
    row.p1 = r.p1;
    row.passive_k1 = r.passive_k1;
    row.passive_dco = r.passive_dco;
    return row;
}

double engine_deviation(const SweepRow& a, const SweepRow& b) {
    double dev = std::max({std::abs(a.E - b.E), std::abs(a.W_ico - b.W_ico), std::abs(a.W_dco - b.W_dco),
                           std::abs(a.p1 - b.p1)});
    const auto cmp = [&dev](const std::optional<double>& x, const std::optional<double>& y) {
        if (x.has_value() != y.has_value()) {
            dev = std::numeric_limits<double>::infinity();
        } else if (x) {
            dev = std::max(dev, std::abs(*x - *y));
        }
    };
    cmp(a.P_ico, b.P_ico);
    cmp(a.P_dco, b.P_dco);
    return dev;
}

SweepTable sweep(const SweepConfig& config) {
    config.validate();
    const std::vector<double> grid = config.grid();
    const std::size_t per_n = grid.size();
    SweepTable table;
    table.rows.resize(config.n_list.size() * per_n);
    parallel_for(table.rows.size(), [&](std::size_t k) {
        const ModelParams params = config.params(config.n_list[k / per_n]);
        const double t = grid[k % per_n];
        switch (config.engine) {
            case Engine::Numeric:
                table.rows[k] = numeric_row(params, t);
                break;
            case Engine::Analytic:
                table.rows[k] = analytic_row(params, t);
                break;
            case Engine::Both: {
                SweepRow row = numeric_row(params, t);
                row.max_engine_dev = engine_deviation(row, analytic_row(params, t));
                table.rows[k] = row;
                break;
            }
        }
    });
    for (const SweepRow& row : table.rows) {
        if (row.max_engine_dev && !(*row.max_engine_dev <= tol::kEngineAgreement)) {
            table.violations.push_back({row.n, row.t, "engines disagree by " + qasm::format_double(*row.max_engine_dev)});
        }
        if (row.W_ico < row.W_dco - tol::kDominance) {
            table.violations.push_back({row.n, row.t, "W_ico below W_dco"});
        }
    }
    return table;
}

std::string sweep_csv(const SweepTable& table, bool with_deviation) {
    CsvWriter csv = with_deviation
                        ? CsvWriter{"N", "t", "E", "W_ico", "P_ico", "W_dco", "P_dco", "p1", "passive_k1", "passive_dco",
                                    "max_engine_dev"}
                        : CsvWriter{"N", "t", "E", "W_ico", "P_ico", "W_dco", "P_dco", "p1", "passive_k1", "passive_dco"};
    for (const SweepRow& r : table.rows) {
        csv.cell(r.n).cell(r.t).cell(r.E).cell(r.W_ico).cell(r.P_ico).cell(r.W_dco).cell(r.P_dco).cell(r.p1);
        csv.cell(r.passive_k1).cell(r.passive_dco);
        if (with_deviation) csv.cell(r.max_engine_dev);
        csv.end_row();
    }
    return csv.str();
}

std::vector<BurstInterval> extract_intervals(const std::vector<SweepRow>& rows, double tau, double eps_dco) {
    std::vector<BurstInterval> out;
    bool open = false;
    for (const SweepRow& r : rows) {
        const bool hit = r.P_dco && r.P_ico && *r.P_dco <= eps_dco && *r.P_ico >= tau;
        if (!hit) {
            open = false;
            continue;
        }
        if (!open) {
            out.push_back({r.t, r.t, *r.P_ico});
            open = true;
        } else {
            out.back().t_end = r.t;
            out.back().max_p_ico = std::max(out.back().max_p_ico, *r.P_ico);
        }
    }
    return out;
}

bool BurstReport::consistent() const {
    return std::all_of(series.begin(), series.end(), [](const BurstSeries& s) { return s.inside_dco_windows; });
}

BurstReport bursts(const SweepConfig& config, const SweepTable& table) {
    config.validate();
    BurstReport rep;
    rep.tau = config.tau;
    rep.eps_dco = config.eps_dco;
    const std::size_t per_n = static_cast<std::size_t>(config.points);
    rep.grid_step = (config.resolved_t_max() - config.t_min) / (config.points - 1);
    for (std::size_t i = 0; i < config.n_list.size(); ++i) {
        const ModelParams params = config.params(config.n_list[i]);
        const std::vector<SweepRow> rows(table.rows.begin() + static_cast<std::ptrdiff_t>(i * per_n),
                                         table.rows.begin() + static_cast<std::ptrdiff_t>((i + 1) * per_n));
        BurstSeries s;
        s.n = params.n_chargers;
        s.t_star = analytic::dco_zero_window(params);
        s.intervals = extract_intervals(rows, config.tau, config.eps_dco);
        // P_dco vanishes on [k*T - t*, k*T + t*] with T the revival period.
        const double period = std::numbers::pi * params.n_chargers / (params.omega * params.lambda);
        for (const BurstInterval& b : s.intervals) {
            s.total_duration += b.t_end - b.t_start;
            if (b.t_start <= s.t_star) s.first_window_duration += std::min(b.t_end, s.t_star) - b.t_start;
            s.max_p_ico = std::max(s.max_p_ico, b.max_p_ico);
            const double k = std::round(0.5 * (b.t_start + b.t_end) / period);
            const double lo = k * period - s.t_star - rep.grid_step;
            const double hi = k * period + s.t_star + rep.grid_step;
            if (b.t_start < lo || b.t_end > hi) s.inside_dco_windows = false;
        }
        rep.series.push_back(std::move(s));
    }
    if (rep.series.size() < 2) {
        rep.monotonic = "n/a";
    } else {
        std::vector<BurstSeries> by_n = rep.series;
        std::sort(by_n.begin(), by_n.end(), [](const BurstSeries& a, const BurstSeries& b) { return a.n < b.n; });
        bool increasing = true;
        for (std::size_t i = 1; i < by_n.size(); ++i) {
            if (!(by_n[i].t_star > by_n[i - 1].t_star)) increasing = false;
        }
        rep.monotonic = increasing ? "pass" : "fail";
    }
    return rep;
}

nlohmann::json to_json(const BurstReport& report) {
    nlohmann::json doc;
    doc["tau"] = report.tau;
    doc["eps_dco"] = report.eps_dco;
    doc["grid_step"] = report.grid_step;
    doc["monotonic"] = report.monotonic;
    doc["series"] = nlohmann::json::array();
    for (const BurstSeries& s : report.series) {
        nlohmann::json js;
        js["N"] = s.n;
        js["t_star"] = s.t_star;
        js["total_duration"] = s.total_duration;
        js["first_window_duration"] = s.first_window_duration;
        js["max_P_ico"] = s.max_p_ico;
        js["inside_dco_windows"] = s.inside_dco_windows;
        js["intervals"] = nlohmann::json::array();
        for (const BurstInterval& b : s.intervals) {
            js["intervals"].push_back({{"t_start", b.t_start}, {"t_end", b.t_end}, {"max_P_ico", b.max_p_ico}});
        }
        doc["series"].push_back(std::move(js));
    }
    return doc;
}

std::string qasm_filename(std::size_t index) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "ico_n2_t%04zu.qasm", index);
    return buf;
}

std::vector<ManifestRow> export_circuits(const SweepConfig& config, const std::filesystem::path& dir) {
    config.validate();
    require_two_chargers(config, "export-circuits");
    const ModelParams params = config.params(2);
    const std::vector<double> grid = config.grid();
    std::filesystem::create_directories(dir);
    std::vector<ManifestRow> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const circuit::Angles a = circuit::angles_of_time(params, grid[i]);
        ManifestRow row{grid[i], a.theta, a.phi, qasm_filename(i)};
        write_text((dir / row.filename).string(), qasm::emit_qasm(circuit::build_ico_circuit(a.theta, a.phi)));
        rows.push_back(std::move(row));
    }
    write_text((dir / "manifest.csv").string(), manifest_csv(rows));
    return rows;
}

std::string manifest_csv(const std::vector<ManifestRow>& rows) {
    CsvWriter csv{"t", "theta", "phi", "filename"};
    for (const ManifestRow& r : rows) {
        csv.cell(r.t).cell(r.theta).cell(r.phi).cell(std::string_view(r.filename));
        csv.end_row();
    }
    return csv.str();
}

std::vector<NoiseRow> noise_study(const SweepConfig& config) {
    config.validate();
    require_two_chargers(config, "noise-study");
    if (!config.shots) throw ConfigError("noise-study needs --shots");
    if (!config.depolarizing_p) throw ConfigError("noise-study needs --depol-p");
    const ModelParams params = config.params(2);
    const circuit::NoiseSpec noise{*config.depolarizing_p};
    const std::vector<double> grid = config.grid();
    std::vector<NoiseRow> rows(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        NoiseRow& row = rows[i];
        row.t = grid[i];
        row.angles = circuit::angles_of_time(params, row.t);
        const analytic::ClosedFormReport ideal = analytic::closed_form_report(params, row.t);
        row.E = ideal.E;
        row.W_ico = ideal.W_ico;
        row.P_ico = ideal.P_ico;
        const circuit::QuantumCircuit qc = circuit::build_ico_circuit(row.angles.theta, row.angles.phi);
        row.counts = circuit::sample(qc, noise, *config.shots, circuit::derive_seed(config.seed, i));
        row.estimate = circuit::estimate(row.counts);
        row.overestimate = row.estimate.report.E > row.E;
    });
    return rows;
}

std::string noise_csv(const std::vector<NoiseRow>& rows) {
    CsvWriter csv{"t", "theta", "phi", "E", "W_ico", "P_ico", "E_hat", "se_E", "W_hat", "se_W",
                  "P_hat", "se_P", "p_plus", "se_p_plus", "overestimate"};
    for (const NoiseRow& r : rows) {
        const circuit::ShotEstimate& e = r.estimate;
        csv.cell(r.t).cell(r.angles.theta).cell(r.angles.phi).cell(r.E).cell(r.W_ico).cell(r.P_ico);
        csv.cell(e.report.E).cell(e.se_E).cell(e.report.W).cell(e.se_W).cell(e.report.P).cell(e.se_P);
        csv.cell(e.p_plus).cell(e.se_p_plus).cell(r.overestimate);
        csv.end_row();
    }
    return csv.str();
}

std::string counts_csv(const std::vector<NoiseRow>& rows) {
    CsvWriter csv{"t", "theta", "phi", "shots", "seed", "c_pg", "c_pe", "c_mg", "c_me"};
    for (const NoiseRow& r : rows) {
        csv.cell(r.t).cell(r.angles.theta).cell(r.angles.phi).cell(r.counts.shots).cell(r.counts.seed);
        for (std::uint64_t c : r.counts.counts) csv.cell(c);
        csv.end_row();
    }
    return csv.str();
}

}  // namespace icobat::app
