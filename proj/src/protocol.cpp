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

#include "icobat/protocol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "icobat/kernels.hpp"
#include "icobat/tolerances.hpp"

namespace icobat {

namespace {

const std::vector<std::string> kBatteryOnly{"Q"};

DenseOperator maximally_mixed_battery() {
    return DenseOperator::identity(SubsystemLayout{{"Q", 2}}).scaled(0.5);
}

DenseOperator normalize_or_mixed(const DenseOperator& sigma, double weight) {
    if (weight < tol::kNegligibleWeight) return maximally_mixed_battery();
    return sigma.scaled(1.0 / weight);
}

// Row-major copy of a 4x4 operator for the kernels.
std::array<cplx, 16> gate_entries(const DenseOperator& u) {
    std::array<cplx, 16> g{};
    std::copy(u.entries().begin(), u.entries().end(), g.begin());
    return g;
}

// Applies the ordered pair unitaries of `order` to a [Q, C1..CN] block.
void apply_order(std::span<cplx> block, const SubsystemLayout& qc, const CyclicOrder& order,
                 const std::array<cplx, 16>& pair) {
    const std::size_t sq = qc.stride(0);
    for (int l : order.sequence) {
        const std::size_t sc = qc.stride(static_cast<std::size_t>(l));
        kernels::omp::apply_two_site(block, sq, sc, pair);
    }
}

}  // namespace

CyclicOrder CyclicOrder::make(int n, int j) {
    if (n < 1 || j < 1 || j > n) throw std::out_of_range("cyclic order index j=" + std::to_string(j) + " outside [1, N]");
    CyclicOrder out;
    out.j = j;
    out.sequence.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.sequence.push_back((j - 1 + i) % n + 1);
    return out;
}

DenseOperator total_unitary(const ModelParams& params, double t) {
    params.validate();
    const int n = params.n_chargers;
    const SubsystemLayout full = SubsystemLayout::protocol(n);
    const SubsystemLayout qc = SubsystemLayout::battery_and_chargers(n);
    const DenseOperator pair = pair_unitary(params, t / n);

    std::vector<DenseOperator> embedded;
    for (int l = 1; l <= n; ++l) embedded.push_back(embed_pair(pair, qc, l));

    DenseOperator out(full);
    const std::size_t block = qc.dim();
    for (int j = 1; j <= n; ++j) {
        DenseOperator branch = DenseOperator::identity(qc);
        for (int l : CyclicOrder::make(n, j).sequence) branch = embedded[static_cast<std::size_t>(l - 1)] * branch;
        const std::size_t offset = static_cast<std::size_t>(j - 1) * block;
        for (std::size_t r = 0; r < block; ++r) {
            for (std::size_t c = 0; c < block; ++c) out.at(offset + r, offset + c) = branch(r, c);
        }
    }
    return out;
}

PureState initial_state(const ModelParams& params) {
    params.validate();
    const int n = params.n_chargers;
    const SubsystemLayout full = SubsystemLayout::protocol(n);
    const SubsystemLayout qc = SubsystemLayout::battery_and_chargers(n);
    // |g>_Q |e...e>_C is the Q-digit 0, all charger digits 1 entry of the block.
    const std::size_t charged = qc.stride(0) - 1;
    std::vector<cplx> amps(full.dim());
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (int m = 0; m < n; ++m) amps[static_cast<std::size_t>(m) * qc.dim() + charged] = a;
    return PureState(full, std::move(amps));
}

DenseOperator switch_projector(int n) {
    if (n < 2) throw std::invalid_argument("switch projector needs N >= 2");
    const auto dim = static_cast<std::size_t>(n);
    DenseOperator out(SubsystemLayout{{"D", dim}});
    for (auto& e : out.mutable_entries()) e = 1.0 / n;
    return out;
}

PureState evolve_branch(const ModelParams& params, double t, int j) {
    params.validate();
    const int n = params.n_chargers;
    const CyclicOrder order = CyclicOrder::make(n, j);
    const SubsystemLayout qc = SubsystemLayout::battery_and_chargers(n);
    PureState psi = PureState::basis(qc, qc.stride(0) - 1);
    apply_order(psi.mutable_amplitudes(), qc, order, gate_entries(pair_unitary(params, t / n)));
    return psi;
}

ProtocolResult run_ico(const ModelParams& params, double t) {
    params.validate();
    const int n = params.n_chargers;
    const SubsystemLayout qc = SubsystemLayout::battery_and_chargers(n);
    const std::size_t block = qc.dim();
    const auto pair = gate_entries(pair_unitary(params, t / n));

    // Controlled evolution: the D = j block only sees order j.
    PureState out = initial_state(params);
    auto amps = out.mutable_amplitudes();
    for (int j = 1; j <= n; ++j) {
        apply_order(amps.subspan(static_cast<std::size_t>(j - 1) * block, block), qc, CyclicOrder::make(n, j), pair);
    }

    // (Pi_1 (x) I)|psi>: every switch block becomes the block average.
    std::vector<cplx> projected(out.dim());
    for (std::size_t i = 0; i < block; ++i) {
        cplx acc{};
        for (int m = 0; m < n; ++m) acc += amps[static_cast<std::size_t>(m) * block + i];
        acc /= static_cast<double>(n);
        for (int m = 0; m < n; ++m) projected[static_cast<std::size_t>(m) * block + i] = acc;
    }
    std::vector<cplx> complement(out.dim());
    for (std::size_t i = 0; i < out.dim(); ++i) complement[i] = amps[i] - projected[i];

    const PureState psi_1(out.layout(), std::move(projected));
    const PureState psi_rest(out.layout(), std::move(complement));
    const DenseOperator sigma_1 = reduced_density(psi_1, kBatteryOnly);
    const DenseOperator sigma_rest = reduced_density(psi_rest, kBatteryOnly);

    ProtocolResult r;
    r.t = t;
    r.p1 = sigma_1.trace().real();
    r.rest_weight = sigma_rest.trace().real();
    r.rho_given_1 = normalize_or_mixed(sigma_1, r.p1);
    r.rho_rest = normalize_or_mixed(sigma_rest, r.rest_weight);
    r.sigma_rest = sigma_rest;
    r.rho_avg = sigma_1 + sigma_rest;
    r.rho_bar = run_dco(params, t, 1);
    return r;
}

DenseOperator run_dco(const ModelParams& params, double t, int j) {
    return reduced_density(evolve_branch(params, t, j), kBatteryOnly);
}

}  // namespace icobat
