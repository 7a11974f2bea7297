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

#include "icobat/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "icobat/tolerances.hpp"

namespace icobat {

namespace {

void require_same_dim(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("state and Hamiltonian dimensions differ");
}

double energy(const DenseOperator& rho, const DenseOperator& h) { return (rho * h).trace().real(); }

// Populations sorted descending; stable so ties keep eigenvector order.
std::vector<double> descending_populations(const DenseOperator& rho) {
    std::vector<double> p = hermitian_eig(rho).values;
    std::stable_sort(p.begin(), p.end(), std::greater<>());
    return p;
}

}  // namespace

void ConditionalEnsemble::validate() const {
    double total = 0.0;
    for (const auto& b : branches) {
        if (b.probability < 0.0) throw std::invalid_argument("negative branch probability");
        total += b.probability;
    }
    if (std::abs(total - 1.0) > 1e-10) throw std::invalid_argument("branch probabilities do not sum to 1");
}

DenseOperator passive_state(const DenseOperator& rho, const DenseOperator& h) {
    require_same_dim(rho, h);
    const std::vector<double> pops = descending_populations(rho);
    const EigenDecomposition levels = hermitian_eig(h);
    const std::size_t n = h.dim();
    DenseOperator out(rho.layout());
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = 0; r < n; ++r) {
            const cplx vr = levels.vectors(r, k);
            for (std::size_t c = 0; c < n; ++c) out.at(r, c) += pops[k] * vr * std::conj(levels.vectors(c, k));
        }
    }
    return out;
}

double ergotropy(const DenseOperator& rho, const DenseOperator& h) {
    require_same_dim(rho, h);
    const std::vector<double> pops = descending_populations(rho);
    const std::vector<double> levels = hermitian_eig(h).values;
    const double passive_energy = std::inner_product(pops.begin(), pops.end(), levels.begin(), 0.0);
    return std::max(0.0, energy(rho, h) - passive_energy);
}

bool is_passive(const DenseOperator& rho, const DenseOperator& h) { return ergotropy(rho, h) <= tol::kPassive; }

double daemonic_ergotropy(const ConditionalEnsemble& ensemble, const DenseOperator& h) {
    ensemble.validate();
    double w = 0.0;
    for (const auto& b : ensemble.branches) {
        if (b.probability == 0.0) continue;
        w += b.probability * ergotropy(b.state, h);
    }
    return w;
}

double stored_energy(const DenseOperator& rho_avg, const DenseOperator& rho0, const DenseOperator& h) {
    require_same_dim(rho_avg, h);
    require_same_dim(rho0, h);
    return energy(rho_avg, h) - energy(rho0, h);
}

std::optional<double> efficiency(double W, double E) {
    if (!(E >= tol::kEnergyFloor)) return std::nullopt;
    return W / E;
}

DenseOperator battery_ground_state() {
    const cplx diag[2] = {1.0, 0.0};
    return DenseOperator::diagonal(SubsystemLayout{{"Q", 2}}, diag);
}

ProtocolReport report(const ProtocolResult& result, const ModelParams& params) {
    const DenseOperator h = battery_hamiltonian(params);
    const DenseOperator ground = battery_ground_state();

    ConditionalEnsemble ensemble;
    ensemble.branches.push_back({result.p1, result.rho_given_1});
    ensemble.branches.push_back({result.rest_weight, result.rho_rest});

    ProtocolReport out;
    const bool passive_k1 = result.p1 < tol::kNegligibleWeight || is_passive(result.rho_given_1, h);
    const bool passive_dco = is_passive(result.rho_bar, h);

    // Report in units of hbar*omega.
    const double unit = params.omega;
    out.ico.E = stored_energy(result.rho_avg, ground, h) / unit;
    out.ico.W = daemonic_ergotropy(ensemble, h) / unit;
    out.ico.P = efficiency(out.ico.W, out.ico.E);
    out.ico.passive_k1 = passive_k1;
    out.ico.passive_dco = passive_dco;

    out.dco.E = stored_energy(result.rho_bar, ground, h) / unit;
    out.dco.W = ergotropy(result.rho_bar, h) / unit;
    out.dco.P = efficiency(out.dco.W, out.dco.E);
    out.dco.passive_k1 = passive_k1;
    out.dco.passive_dco = passive_dco;
    return out;
}

}  // namespace icobat
