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

// The switch-controlled charging protocol: total unitary, joint input state,
// switch measurement and the resulting conditional battery states.

#include <vector>

#include "icobat/model.hpp"
#include "icobat/qmat.hpp"

namespace icobat {

/// Charging order selected by switch value j (1-based): (j, j+1, ..., N, 1, ..., j-1).
struct CyclicOrder {
    int j = 1;
    std::vector<int> sequence;

    /// Throws std::out_of_range unless 1 <= j <= n.
    static CyclicOrder make(int n, int j);
};

struct ProtocolResult {
    double t = 0.0;
    double p1 = 0.0;                ///< probability of the uniform-superposition outcome
    DenseOperator rho_given_1;      ///< normalized battery state for that outcome
    double rest_weight = 0.0;       ///< 1 - p1, all other outcomes together
    DenseOperator rho_rest;         ///< normalized battery state of the complement outcome
    DenseOperator sigma_rest;       ///< unnormalized complement state, (1 - p1)|e><e| ideally
    DenseOperator rho_bar;          ///< battery state after one definite order
    DenseOperator rho_avg;          ///< p1 * rho_given_1 + rest_weight * rho_rest
};

/// Sum_j |j><j|_D (x) U_{order_j(N)} ... U_{order_j(1)} with every U at t/N.
/// Dense on the full register; meant for small N.
DenseOperator total_unitary(const ModelParams& params, double t);

/// (sum_m |m>_D)/sqrt(N) (x) |g>_Q (x) |e>^N.
PureState initial_state(const ModelParams& params);

/// (1/N) sum_{m,n} |m><n| on the switch.
DenseOperator switch_projector(int n);

/// Battery and charger state |g, e...e> evolved through order j for total time t.
PureState evolve_branch(const ModelParams& params, double t, int j);

/// Runs the superposed-order protocol and measures the switch.
ProtocolResult run_ico(const ModelParams& params, double t);

/// Battery state after the single order j.
DenseOperator run_dco(const ModelParams& params, double t, int j);

}  // namespace icobat
