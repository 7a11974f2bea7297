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

// Battery/charger physics: Hamiltonians, the closed-form pair unitary and its
// embedding into a larger register.
//
// Two-level convention: |g> is basis index 0 and |e> is index 1. hbar = 1 and
// energies come out in units where omega carries the scale.

#include "icobat/qmat.hpp"

namespace icobat {

struct ModelParams {
    int n_chargers = 2;
    double omega = 1.0;
    double lambda = 0.1;

    /// Throws std::invalid_argument if N < 2, omega <= 0 or lambda <= 0.
    void validate() const;
};

/// Pauli operators with sigma_z = |e><e| - |g><g| on a single subsystem.
DenseOperator sigma_x(const std::string& label = "Q");
DenseOperator sigma_y(const std::string& label = "Q");
DenseOperator sigma_z(const std::string& label = "Q");

/// (omega/2) sigma_z on Q.
DenseOperator battery_hamiltonian(const ModelParams& params);

/// H = (w/2)(sz_C + 1) + (w/2) sz_Q + (w*lambda/2)(sx_Q sx_C + sy_Q sy_C) on [Q, C].
DenseOperator pair_hamiltonian(const ModelParams& params);

/// Closed-form exp(-i H t_l) on [Q, C], written out term by term.
DenseOperator pair_unitary(const ModelParams& params, double t_l);

/// Embeds a 4x4 operator on (Q, C_l) into `layout` (which must hold "Q" and
/// "C<l>"), identity elsewhere. Throws std::out_of_range for a bad index.
DenseOperator embed_pair(const DenseOperator& op, const SubsystemLayout& layout, int charger_index);

}  // namespace icobat
