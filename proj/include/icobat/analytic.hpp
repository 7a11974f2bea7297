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

// Closed-form results for the |g>_Q |e...e>_C input with equal per-charger
// durations t/N. Independent of the state-vector pipeline, which it is used
// to cross-check.

#include <optional>
#include <vector>

#include "icobat/model.hpp"
#include "icobat/qmat.hpp"

namespace icobat::analytic {

/// Amplitudes of order 1: alpha[0] on |g, all chargers excited>, alpha[u] on
/// |e, charger u de-excited>.
struct AlphaCoefficients {
    double t = 0.0;
    std::vector<cplx> alpha;  ///< size N + 1
};

AlphaCoefficients alpha_coeffs(const ModelParams& params, double t);

/// 1-based cyclic index partner used by the interference sum: ((v + u - 1) mod N) + 1.
int cyclic_partner(int v, int u, int n);

/// Order-j branch on [Q, C1..CN], with alpha[i] on the charger visited i-th.
PureState branch_state(const ModelParams& params, double t, int j);

/// C = (2/N) sum_{u=1}^{N-1} (N-u) Re[ sum_{v=1}^{N} alpha_v conj(alpha_{partner(v,u)}) ].
double interference_term(const ModelParams& params, double t);

/// Energies in units of hbar*omega.
struct ClosedFormReport {
    double t = 0.0;
    double C1 = 0.0;            ///< interference term
    double p1 = 0.0;
    double ground_k1 = 0.0;     ///< unnormalized ground population of the uniform outcome
    double excited_k1 = 0.0;    ///< unnormalized excited population of the uniform outcome
    double E = 0.0;
    double W_ico = 0.0;
    double W_dco = 0.0;
    std::optional<double> P_ico;
    std::optional<double> P_dco;
    bool passive_k1 = true;
    bool passive_dco = true;
};

ClosedFormReport closed_form_report(const ModelParams& params, double t);

/// Smallest t > 0 with cos^{2N}(omega*lambda*t/N) = 1/2; the definite-order
/// efficiency is zero on (0, t*).
double dco_zero_window(const ModelParams& params);

}  // namespace icobat::analytic
