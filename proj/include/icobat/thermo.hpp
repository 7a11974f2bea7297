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

// Work and energy accounting for battery states: passive states, ergotropy,
// measurement-averaged ergotropy, stored energy and charging efficiency.

#include <optional>
#include <vector>

#include "icobat/model.hpp"
#include "icobat/protocol.hpp"
#include "icobat/qmat.hpp"

namespace icobat {

/// Energies in units of hbar*omega.
struct EnergyReport {
    double E = 0.0;            ///< stored energy
    double W = 0.0;            ///< ergotropy (daemonic for the superposed protocol)
    std::optional<double> P;   ///< W / E, empty when E is below the energy floor
    bool passive_k1 = true;    ///< conditional state of the uniform outcome is passive
    bool passive_dco = true;   ///< definite-order state is passive
};

struct ConditionalBranch {
    double probability = 0.0;
    DenseOperator state;
};

/// Outcome probabilities with their normalized conditional states.
struct ConditionalEnsemble {
    std::vector<ConditionalBranch> branches;

    /// Throws std::invalid_argument for negative probabilities or a total away from 1.
    void validate() const;
};

/// rho's eigenvalues sorted descending, placed on h's eigenvectors sorted ascending.
DenseOperator passive_state(const DenseOperator& rho, const DenseOperator& h);

/// Tr[rho h] - Tr[passive(rho) h], clamped at zero.
double ergotropy(const DenseOperator& rho, const DenseOperator& h);

bool is_passive(const DenseOperator& rho, const DenseOperator& h);

/// sum_k p_k * ergotropy(rho_k, h).
double daemonic_ergotropy(const ConditionalEnsemble& ensemble, const DenseOperator& h);

/// Tr[rho_avg h] - Tr[rho0 h].
double stored_energy(const DenseOperator& rho_avg, const DenseOperator& rho0, const DenseOperator& h);

/// W / E, or nothing when E < tol::kEnergyFloor.
std::optional<double> efficiency(double W, double E);

/// |g><g| on Q.
DenseOperator battery_ground_state();

struct ProtocolReport {
    EnergyReport ico;
    EnergyReport dco;
};

ProtocolReport report(const ProtocolResult& result, const ModelParams& params);

}  // namespace icobat
