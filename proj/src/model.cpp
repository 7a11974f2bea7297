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

#include "icobat/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace icobat {

void ModelParams::validate() const {
    if (n_chargers < 2) throw std::invalid_argument("need N >= 2 chargers");
    if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("omega must be positive");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be positive");
}

DenseOperator sigma_x(const std::string& label) { return DenseOperator::from_rows(label, {{0.0, 1.0}, {1.0, 0.0}}); }

DenseOperator sigma_y(const std::string& label) {
    // -i|e><g| + i|g><e|
    const cplx i{0.0, 1.0};
    return DenseOperator::from_rows(label, {{0.0, i}, {-i, 0.0}});
}

DenseOperator sigma_z(const std::string& label) { return DenseOperator::from_rows(label, {{-1.0, 0.0}, {0.0, 1.0}}); }

DenseOperator battery_hamiltonian(const ModelParams& params) {
    params.validate();
    return sigma_z("Q").scaled(params.omega / 2.0);
}

DenseOperator pair_hamiltonian(const ModelParams& params) {
    params.validate();
    const double w = params.omega;
    const DenseOperator id_q = DenseOperator::identity(SubsystemLayout{{"Q", 2}});
    const DenseOperator id_c = DenseOperator::identity(SubsystemLayout{{"C", 2}});
    const DenseOperator charger = tensor(id_q, sigma_z("C") + id_c).scaled(w / 2.0);
    const DenseOperator battery = tensor(sigma_z("Q"), id_c).scaled(w / 2.0);
    const DenseOperator exchange =
        (tensor(sigma_x("Q"), sigma_x("C")) + tensor(sigma_y("Q"), sigma_y("C"))).scaled(w * params.lambda / 2.0);
    return charger + battery + exchange;
}

DenseOperator pair_unitary(const ModelParams& params, double t_l) {
    params.validate();
    const double w = params.omega;
    const double arg = w * params.lambda * t_l;
    const cplx slow = std::polar(1.0, -w * t_l / 2.0);
    const cplx cos_term = slow * std::cos(arg);
    const cplx sin_term = slow * cplx{0.0, -std::sin(arg)};

    // Index = 2*q + c with g=0, e=1.
    constexpr std::size_t gg = 0, ge = 1, eg = 2, ee = 3;
    DenseOperator u(SubsystemLayout{{"Q", 2}, {"C", 2}});
    u.at(ee, ee) = std::polar(1.0, -3.0 * w * t_l / 2.0);
    u.at(eg, eg) = cos_term;
    u.at(ge, eg) = sin_term;  // |g><e|_Q |e><g|_C
    u.at(eg, ge) = sin_term;  // |e><g|_Q |g><e|_C
    u.at(ge, ge) = cos_term;
    u.at(gg, gg) = std::polar(1.0, w * t_l / 2.0);
    return u;
}

DenseOperator embed_pair(const DenseOperator& op, const SubsystemLayout& layout, int charger_index) {
    if (op.dim() != 4) throw std::invalid_argument("embed_pair expects a 4x4 operator");
    const std::string charger = "C" + std::to_string(charger_index);
    if (charger_index < 1 || !layout.contains(charger)) {
        throw std::out_of_range("charger index " + std::to_string(charger_index) + " not in layout");
    }
    const std::size_t pq = layout.position("Q");
    const std::size_t pc = layout.position(charger);
    if (layout[pq].dim != 2 || layout[pc].dim != 2) throw std::invalid_argument("embed_pair needs two-level Q and C");
    const std::size_t sq = layout.stride(pq);
    const std::size_t sc = layout.stride(pc);

    DenseOperator out(layout);
    const std::size_t n = layout.dim();
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t dq = (col / sq) % 2;
        const std::size_t dc = (col / sc) % 2;
        const std::size_t base = col - dq * sq - dc * sc;
        const std::size_t in = 2 * dq + dc;
        for (std::size_t outq = 0; outq < 2; ++outq) {
            for (std::size_t outc = 0; outc < 2; ++outc) {
                const cplx v = op(2 * outq + outc, in);
                if (v != cplx{}) out.at(base + outq * sq + outc * sc, col) = v;
            }
        }
    }
    return out;
}

}  // namespace icobat
