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

#include "icobat/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "icobat/kernels.hpp"
#include "icobat/tolerances.hpp"

namespace icobat::circuit {

namespace {

constexpr std::size_t kDim = 16;

std::size_t stride_of(int qubit) { return std::size_t{1} << (kNumQubits - 1 - qubit); }

SubsystemLayout register_layout() { return SubsystemLayout{{"D", 2}, {"Q", 2}, {"C1", 2}, {"C2", 2}}; }

void apply_gate(std::span<cplx> state, const Gate& gate) {
    const DenseOperator u = gate_unitary(gate);
    if (gate_arity(gate.kind) == 1) {
        std::array<cplx, 4> g{};
        std::copy(u.entries().begin(), u.entries().end(), g.begin());
        kernels::omp::apply_one_site(state, stride_of(gate.q0), g);
    } else {
        std::array<cplx, 16> g{};
        std::copy(u.entries().begin(), u.entries().end(), g.begin());
        kernels::omp::apply_two_site(state, stride_of(gate.q0), stride_of(gate.q1), g);
    }
}

// Controlled pair block on (Q, charger), active when D equals `control_value`.
void append_controlled_charge(std::vector<Gate>& gates, int control_value, int charger, double theta, double phi) {
    if (control_value == 0) gates.push_back({GateKind::X, kSwitch});
    // Phase part: controlled exp(-i phi/2 (sz_Q + sz_C)) times the e^{-i phi/2} offset.
    gates.push_back({GateKind::RZ, kSwitch, -1, phi / 2.0});
    gates.push_back({GateKind::CP, kSwitch, kBattery, -phi});
    gates.push_back({GateKind::CP, kSwitch, charger, -phi});
    // Exchange part: CZ conjugation flips the sign of the second half-rotation
    // when D = 1, so the pair cancels for D = 0 and adds up to theta for D = 1.
    gates.push_back({GateKind::XX, kBattery, charger, theta / 2.0});
    gates.push_back({GateKind::YY, kBattery, charger, theta / 2.0});
    gates.push_back({GateKind::CZ, kSwitch, kBattery});
    gates.push_back({GateKind::XX, kBattery, charger, -theta / 2.0});
    gates.push_back({GateKind::YY, kBattery, charger, -theta / 2.0});
    gates.push_back({GateKind::CZ, kSwitch, kBattery});
    if (control_value == 0) gates.push_back({GateKind::X, kSwitch});
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::CZ: return "cz";
        case GateKind::XX: return "rxx";
        case GateKind::YY: return "ryy";
        case GateKind::CP: return "cp";
        case GateKind::RZ: return "rz";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (GateKind k : {GateKind::H, GateKind::X, GateKind::CZ, GateKind::XX, GateKind::YY, GateKind::CP, GateKind::RZ}) {
        if (gate_name(k) == name) return k;
    }
    return std::nullopt;
}

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::RZ: return 1;
        default: return 2;
    }
}

bool gate_has_angle(GateKind kind) {
    return kind == GateKind::XX || kind == GateKind::YY || kind == GateKind::CP || kind == GateKind::RZ;
}

void QuantumCircuit::validate() const {
    if (prep_gates > gates.size()) throw std::invalid_argument("prep gate count exceeds gate list");
    for (const Gate& g : gates) {
        const auto in_range = [](int q) { return q >= 0 && q < kNumQubits; };
        if (!in_range(g.q0)) throw std::invalid_argument("gate qubit out of range");
        if (gate_arity(g.kind) == 2) {
            if (!in_range(g.q1)) throw std::invalid_argument("gate qubit out of range");
            if (g.q0 == g.q1) throw std::invalid_argument("two-qubit gate on a repeated qubit");
        } else if (g.q1 != -1) {
            throw std::invalid_argument("single-qubit gate with a second qubit");
        }
        if (!std::isfinite(g.angle)) throw std::invalid_argument("non-finite gate angle");
        if (!gate_has_angle(g.kind) && g.angle != 0.0) throw std::invalid_argument("angle on a fixed gate");
    }
}

void NoiseSpec::validate() const {
    if (!(depolarizing_p >= 0.0 && depolarizing_p <= 1.0)) {
        throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
    }
}

Angles angles_of_time(const ModelParams& params, double t) {
    params.validate();
    return {params.omega * params.lambda * t / 2.0, params.omega * t / 2.0};
}

QuantumCircuit build_ico_circuit(double theta, double phi) {
    QuantumCircuit c;
    c.gates.push_back({GateKind::H, kSwitch});
    c.gates.push_back({GateKind::X, kCharger1});
    c.gates.push_back({GateKind::X, kCharger2});
    c.prep_gates = c.gates.size();
    append_controlled_charge(c.gates, 0, kCharger1, theta, phi);
    append_controlled_charge(c.gates, 1, kCharger2, theta, phi);
    append_controlled_charge(c.gates, 0, kCharger2, theta, phi);
    append_controlled_charge(c.gates, 1, kCharger1, theta, phi);
    return c;
}

QuantumCircuit build_ico_circuit(double theta, const ModelParams& params) {
    params.validate();
    return build_ico_circuit(theta, theta / params.lambda);
}

DenseOperator gate_unitary(const Gate& gate) {
    const cplx i{0.0, 1.0};
    const double a = gate.angle;
    const double c = std::cos(a / 2.0);
    const double s = std::sin(a / 2.0);
    switch (gate.kind) {
        case GateKind::H: {
            const double h = 1.0 / std::sqrt(2.0);
            return DenseOperator::from_rows("q", {{h, h}, {h, -h}});
        }
        case GateKind::X: return DenseOperator::from_rows("q", {{0.0, 1.0}, {1.0, 0.0}});
        case GateKind::RZ: return DenseOperator::from_rows("q", {{std::polar(1.0, -a / 2.0), 0.0}, {0.0, std::polar(1.0, a / 2.0)}});
        case GateKind::CZ:
            return DenseOperator::from_rows("qq", {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, -1.0}});
        case GateKind::CP:
            return DenseOperator::from_rows("qq", {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, std::polar(1.0, a)}});
        case GateKind::XX:
            return DenseOperator::from_rows("qq", {{c, 0.0, 0.0, -i * s}, {0.0, c, -i * s, 0.0}, {0.0, -i * s, c, 0.0}, {-i * s, 0.0, 0.0, c}});
        case GateKind::YY:
            // Y (x) Y has +1 on the anti-diagonal middle and -1 on the corners.
            return DenseOperator::from_rows("qq", {{c, 0.0, 0.0, i * s}, {0.0, c, -i * s, 0.0}, {0.0, -i * s, c, 0.0}, {i * s, 0.0, 0.0, c}});
    }
    throw std::logic_error("unknown gate kind");
}

DenseOperator circuit_unitary(const QuantumCircuit& circuit, bool include_preparation) {
    circuit.validate();
    const std::span<const Gate> gates = include_preparation ? std::span<const Gate>(circuit.gates) : circuit.charging();
    // Evolve each basis column, then transpose into row-major storage.
    std::vector<cplx> columns(kDim * kDim);
    for (std::size_t col = 0; col < kDim; ++col) {
        std::span<cplx> v(columns.data() + col * kDim, kDim);
        v[col] = 1.0;
        for (const Gate& g : gates) apply_gate(v, g);
    }
    DenseOperator out(register_layout());
    for (std::size_t col = 0; col < kDim; ++col) {
        for (std::size_t row = 0; row < kDim; ++row) out.at(row, col) = columns[col * kDim + row];
    }
    return out;
}

double phase_insensitive_distance(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("comparing operators of different dimension");
    // |A - e^{i x} B|_F is minimized at x = arg tr(B^dagger A). The norm of the
    // aligned difference is summed directly to avoid cancellation.
    cplx overlap{};
    for (std::size_t k = 0; k < a.entries().size(); ++k) overlap += std::conj(b.entries()[k]) * a.entries()[k];
    const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0};
    double sum = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) sum += std::norm(a.entries()[k] - phase * b.entries()[k]);
    return std::sqrt(sum);
}

DenseOperator simulate(const QuantumCircuit& circuit, const NoiseSpec& noise) {
    circuit.validate();
    noise.validate();
    PureState psi = PureState::basis(register_layout(), 0);
    for (const Gate& g : circuit.gates) apply_gate(psi.mutable_amplitudes(), g);
    DenseOperator rho = DenseOperator::outer(psi);
    if (noise.depolarizing_p > 0.0) {
        const double p = noise.depolarizing_p;
        rho = rho.scaled(1.0 - p) + DenseOperator::identity(register_layout()).scaled(p / kDim);
    }
    return rho;
}

std::array<double, 4> outcome_probabilities(const DenseOperator& rho) {
    const DenseOperator dq = partial_trace(rho, {"D", "Q"});
    std::array<double, 4> p{};
    for (std::size_t q = 0; q < 2; ++q) {
        const double diag = dq(q, q).real() + dq(2 + q, 2 + q).real();
        const double coherence = 2.0 * dq(q, 2 + q).real();
        p[q] = std::max(0.0, (diag + coherence) / 2.0);
        p[2 + q] = std::max(0.0, (diag - coherence) / 2.0);
    }
    return p;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ShotResult sample_probabilities(const std::array<double, 4>& probs, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("shots must be at least 1");
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw std::invalid_argument("negative outcome probability");
        total += p;
    }
    if (!(total > 0.0)) throw std::invalid_argument("outcome probabilities sum to zero");

    std::array<double, 4> cumulative{};
    double running = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        running += probs[k] / total;
        cumulative[k] = running;
        if (probs[k] > 0.0) last_nonzero = k;
    }

    ShotResult out;
    out.shots = shots;
    out.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        // 53 random mantissa bits; the mt19937_64 stream is fixed by the standard.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        std::size_t k = 0;
        while (k < 4 && !(u < cumulative[k])) ++k;
        if (k == 4 || probs[k] == 0.0) k = last_nonzero;
        ++out.counts[k];
    }
    return out;
}

ShotResult sample(const QuantumCircuit& circuit, const NoiseSpec& noise, std::uint64_t shots, std::uint64_t seed) {
    return sample_probabilities(outcome_probabilities(simulate(circuit, noise)), shots, seed);
}

ShotEstimate estimate(const ShotResult& result) {
    std::uint64_t total = 0;
    for (auto c : result.counts) total += c;
    if (total == 0 || total != result.shots) throw std::invalid_argument("counts must be non-empty and sum to shots");
    std::array<double, 4> f{};
    for (std::size_t k = 0; k < 4; ++k) f[k] = static_cast<double>(result.counts[k]) / static_cast<double>(total);
    return estimate(f, static_cast<double>(total));
}

ShotEstimate estimate(const std::array<double, 4>& frequencies, double shots) {
    if (!(shots > 0.0)) throw std::invalid_argument("shot count must be positive");
    using O = ShotResult::Outcome;
    const auto& f = frequencies;

    ShotEstimate out;
    out.p_plus = f[O::kPlusG] + f[O::kPlusE];
    out.empty_branch = out.p_plus == 0.0 || f[O::kMinusG] + f[O::kMinusE] == 0.0;

    // Conditional states are z-diagonal, so each branch's ergotropy is the
    // positive part of its population inversion.
    const bool plus_active = f[O::kPlusE] > f[O::kPlusG];
    const bool minus_active = f[O::kMinusE] > f[O::kMinusG];
    const double E = f[O::kPlusE] + f[O::kMinusE];
    const double W = (plus_active ? f[O::kPlusE] - f[O::kPlusG] : 0.0) +
                     (minus_active ? f[O::kMinusE] - f[O::kMinusG] : 0.0);
    out.report.E = E;
    out.report.W = W;
    out.report.P = efficiency(W, E);
    out.report.passive_k1 = !plus_active;

    // Delta method on the multinomial frequencies: Var(g.f) = (sum g_i^2 f_i - (g.f)^2) / n.
    const auto variance = [&](const std::array<double, 4>& g) {
        double m1 = 0.0, m2 = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            m1 += g[k] * f[k];
            m2 += g[k] * g[k] * f[k];
        }
        return std::max(0.0, m2 - m1 * m1) / shots;
    };
    const std::array<double, 4> grad_p{1.0, 1.0, 0.0, 0.0};
    const std::array<double, 4> grad_e{0.0, 1.0, 0.0, 1.0};
    const std::array<double, 4> grad_w{plus_active ? -1.0 : 0.0, plus_active ? 1.0 : 0.0,
                                       minus_active ? -1.0 : 0.0, minus_active ? 1.0 : 0.0};
    out.se_p_plus = std::sqrt(variance(grad_p));
    out.se_E = std::sqrt(variance(grad_e));
    out.se_W = std::sqrt(variance(grad_w));
    if (out.report.P) {
        std::array<double, 4> grad_ratio{};
        for (std::size_t k = 0; k < 4; ++k) grad_ratio[k] = (grad_w[k] * E - W * grad_e[k]) / (E * E);
        out.se_P = std::sqrt(variance(grad_ratio));
    }
    return out;
}

}  // namespace icobat::circuit
