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

#include "icobat/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "icobat/tolerances.hpp"

namespace icobat::analytic {

AlphaCoefficients alpha_coeffs(const ModelParams& params, double t) {
    params.validate();
    const int n = params.n_chargers;
    const double w = params.omega;
    const double step = w * params.lambda * t / n;
    const cplx slow = std::polar(1.0, -w * t / (2.0 * n));        // e^{-i w t / 2N}
    const cplx fast = std::polar(1.0, -3.0 * w * t / (2.0 * n));  // e^{-3i w t / 2N}
    const cplx stay = slow * std::cos(step);
    const cplx swap = slow * cplx{0.0, -std::sin(step)};

    AlphaCoefficients out;
    out.t = t;
    out.alpha.resize(static_cast<std::size_t>(n) + 1);
    out.alpha[0] = std::pow(stay, n);
    for (int j = 1; j <= n; ++j) {
        out.alpha[static_cast<std::size_t>(j)] = std::pow(fast, n - j) * swap * std::pow(stay, j - 1);
    }
    return out;
}

int cyclic_partner(int v, int u, int n) { return (v + u - 1) % n + 1; }

PureState branch_state(const ModelParams& params, double t, int j) {
    params.validate();
    const int n = params.n_chargers;
    if (j < 1 || j > n) throw std::out_of_range("branch index j=" + std::to_string(j) + " outside [1, N]");
    const auto a = alpha_coeffs(params, t).alpha;
    const SubsystemLayout qc = SubsystemLayout::battery_and_chargers(n);

    const std::size_t all_excited = (std::size_t{1} << n) - 1;
    const std::size_t battery_excited = std::size_t{1} << n;
    std::vector<cplx> amps(qc.dim());
    amps[all_excited] = a[0];
    for (int i = 1; i <= n; ++i) {
        const int charger = (j - 1 + i - 1) % n + 1;
        const std::size_t charger_bit = std::size_t{1} << (n - charger);
        amps[battery_excited + all_excited - charger_bit] = a[static_cast<std::size_t>(i)];
    }
    return PureState(qc, std::move(amps));
}

namespace {

double interference_from(const std::vector<cplx>& a, int n) {
    double c = 0.0;
    for (int u = 1; u <= n - 1; ++u) {
        cplx s{};
        for (int v = 1; v <= n; ++v) {
            s += a[static_cast<std::size_t>(v)] * std::conj(a[static_cast<std::size_t>(cyclic_partner(v, u, n))]);
        }
        c += 2.0 * (n - u) / n * s.real();
    }
    return c;
}

}  // namespace

double interference_term(const ModelParams& params, double t) {
    return interference_from(alpha_coeffs(params, t).alpha, params.n_chargers);
}

ClosedFormReport closed_form_report(const ModelParams& params, double t) {
    const int n = params.n_chargers;
    const auto a = alpha_coeffs(params, t).alpha;
    const double cos_pow = std::pow(std::cos(params.omega * params.lambda * t / n), 2 * n);

    double excited_total = 0.0;
    for (int u = 1; u <= n; ++u) excited_total += std::norm(a[static_cast<std::size_t>(u)]);

    ClosedFormReport r;
    r.t = t;
    r.C1 = interference_from(a, n);
    r.ground_k1 = std::norm(a[0]);
    r.excited_k1 = (r.C1 + excited_total) / n;
    r.p1 = r.ground_k1 + r.excited_k1;
    r.E = 1.0 - cos_pow;

    r.passive_k1 = r.ground_k1 >= r.excited_k1;
    r.W_ico = r.passive_k1 ? (n - 1.0) / n * excited_total - r.C1 / n : 1.0 - 2.0 * cos_pow;

    r.passive_dco = cos_pow >= 0.5;
    r.W_dco = r.passive_dco ? 0.0 : 1.0 - 2.0 * cos_pow;

    r.P_ico = r.E >= tol::kEnergyFloor ? std::optional<double>(r.W_ico / r.E) : std::nullopt;
    r.P_dco = r.E >= tol::kEnergyFloor ? std::optional<double>(r.W_dco / r.E) : std::nullopt;
    return r;
}

double dco_zero_window(const ModelParams& params) {
    params.validate();
    const int n = params.n_chargers;
    return n / (params.omega * params.lambda) * std::acos(std::pow(2.0, -1.0 / (2.0 * n)));
}

}  // namespace icobat::analytic
