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

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "icobat/app/commands.hpp"
#include "icobat/app/config.hpp"
#include "icobat/app/csv.hpp"

namespace {

using icobat::app::ConfigError;
using icobat::app::SweepConfig;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInvariant = 3;

struct Flags {
    std::string config;
    std::string n_list;
    double omega = 0.0;
    double lambda = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
    int points = 0;
    std::string engine;
    std::uint64_t shots = 0;
    double depol_p = 0.0;
    std::uint64_t seed = 0;
    std::string out;
    double tau = 0.0;
    double eps_dco = 0.0;
    std::string counts_out;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("--config", f.config, "JSON config file; flags override its values");
    sub->add_option("--n", f.n_list, "comma-separated charger counts, e.g. 2,3,4,5");
    sub->add_option("--omega", f.omega, "battery level spacing");
    sub->add_option("--lambda", f.lambda, "battery-charger coupling ratio");
    sub->add_option("--t-min", f.t_min, "first grid time");
    sub->add_option("--t-max", f.t_max, "last grid time (default 4*pi/(omega*lambda))");
    sub->add_option("--points", f.points, "number of grid points");
    sub->add_option("--engine", f.engine, "numeric, analytic or both");
    sub->add_option("--shots", f.shots, "shots per grid point");
    sub->add_option("--depol-p", f.depol_p, "depolarizing weight in [0, 1]");
    sub->add_option("--seed", f.seed, "64-bit base seed");
    sub->add_option("--out", f.out, "output path (directory for export-circuits)");
    sub->add_option("--tau", f.tau, "burst threshold on P_ico");
    sub->add_option("--eps-dco", f.eps_dco, "burst threshold on P_dco");
}

bool given(const CLI::App* sub, const std::string& name) { return sub->get_option(name)->count() > 0; }

SweepConfig resolve(const CLI::App* sub, const Flags& f, std::vector<int> default_n = {2, 3, 4, 5}) {
    SweepConfig c;
    c.n_list = std::move(default_n);
    if (given(sub, "--config")) c = icobat::app::load_config_file(f.config);
    if (given(sub, "--n")) c.n_list = icobat::app::parse_n_list(f.n_list);
    if (given(sub, "--omega")) c.omega = f.omega;
    if (given(sub, "--lambda")) c.lambda = f.lambda;
    if (given(sub, "--t-min")) c.t_min = f.t_min;
    if (given(sub, "--t-max")) c.t_max = f.t_max;
    if (given(sub, "--points")) c.points = f.points;
    if (given(sub, "--engine")) c.engine = icobat::app::parse_engine(f.engine);
    if (given(sub, "--shots")) c.shots = f.shots;
    if (given(sub, "--depol-p")) c.depolarizing_p = f.depol_p;
    if (given(sub, "--seed")) c.seed = f.seed;
    if (given(sub, "--out")) c.output = f.out;
    if (given(sub, "--tau")) c.tau = f.tau;
    if (given(sub, "--eps-dco")) c.eps_dco = f.eps_dco;
    c.validate();
    return c;
}

int report_violations(const icobat::app::SweepTable& table) {
    for (const auto& v : table.violations) {
        std::cerr << "invariant violated at N=" << v.n << " t=" << v.t << ": " << v.what << "\n";
    }
    return table.violations.empty() ? kExitOk : kExitInvariant;
}

int run_sweep(const SweepConfig& c) {
    const icobat::app::SweepTable table = icobat::app::sweep(c);
    icobat::app::write_text(c.output, icobat::app::sweep_csv(table, c.engine == icobat::app::Engine::Both));
    return report_violations(table);
}

int run_bursts(const SweepConfig& c) {
    const icobat::app::SweepTable table = icobat::app::sweep(c);
    const icobat::app::BurstReport rep = icobat::app::bursts(c, table);
    icobat::app::write_text(c.output, icobat::app::to_json(rep).dump(2) + "\n");
    int code = report_violations(table);
    if (!rep.consistent()) {
        std::cerr << "invariant violated: burst interval outside the zero-P_dco windows\n";
        code = kExitInvariant;
    }
    return code;
}

int run_export(const SweepConfig& c) {
    if (c.output.empty()) throw ConfigError("export-circuits needs --out <directory>");
    const auto rows = icobat::app::export_circuits(c, c.output);
    std::cerr << "wrote " << rows.size() << " circuits and manifest.csv to " << c.output << "\n";
    return kExitOk;
}

int run_noise(const SweepConfig& c, const std::string& counts_out) {
    const auto rows = icobat::app::noise_study(c);
    icobat::app::write_text(c.output, icobat::app::noise_csv(rows));
    if (!counts_out.empty()) icobat::app::write_text(counts_out, icobat::app::counts_csv(rows));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Superposed cyclic-order charging of a qubit battery"};
    app.require_subcommand(1);
    Flags flags;
    CLI::App* sweep = app.add_subcommand("sweep", "E, W, P for both protocols over a time grid (CSV)");
    CLI::App* bursts = app.add_subcommand("bursts", "intervals where P_ico is high while P_dco is zero (JSON)");
    CLI::App* exporter = app.add_subcommand("export-circuits", "two-charger QASM circuits per grid point plus manifest");
    CLI::App* noise = app.add_subcommand("noise-study", "sampled two-charger circuit under depolarizing noise (CSV)");
    for (CLI::App* sub : {sweep, bursts, exporter, noise}) add_common(sub, flags);
    noise->add_option("--counts-out", flags.counts_out, "also write raw counts to this CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*sweep) return run_sweep(resolve(sweep, flags));
        if (*bursts) return run_bursts(resolve(bursts, flags));
        if (*exporter) return run_export(resolve(exporter, flags, {2}));
        if (*noise) return run_noise(resolve(noise, flags, {2}), flags.counts_out);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
