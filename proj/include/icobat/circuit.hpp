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

// Gate-level model of the two-charger protocol on the register [D, Q, C1, C2]:
// construction, state-vector execution, global depolarizing noise, shot
// sampling and count-based estimation.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icobat/model.hpp"
#include "icobat/qmat.hpp"
#include "icobat/thermo.hpp"

namespace icobat::circuit {

enum class GateKind { H, X, CZ, XX, YY, CP, RZ };

/// Lower-case mnemonic used in QASM text ("h", "x", "cz", "rxx", "ryy", "cp", "rz").
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
int gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);

struct Gate {
    GateKind kind = GateKind::H;
    int q0 = 0;
    int q1 = -1;         ///< second qubit, -1 for single-qubit kinds
    double angle = 0.0;  ///< radians, XX/YY/CP/RZ only

    bool operator==(const Gate&) const = default;
};

inline constexpr int kNumQubits = 4;
inline constexpr int kSwitch = 0;
inline constexpr int kBattery = 1;
inline constexpr int kCharger1 = 2;
inline constexpr int kCharger2 = 3;

/// Gate list on [D, Q, C1, C2]. The first `prep_gates` gates prepare the
/// input; the rest are the charging blocks. Measurement is fixed: D in the
/// x basis, Q in the z basis.
struct QuantumCircuit {
    std::array<std::string, kNumQubits> labels{"D", "Q", "C1", "C2"};
    std::vector<Gate> gates;
    std::size_t prep_gates = 0;

    std::span<const Gate> preparation() const { return std::span(gates).first(prep_gates); }
    std::span<const Gate> charging() const { return std::span(gates).subspan(prep_gates); }

    /// Throws std::invalid_argument for out-of-range or repeated qubits,
    /// arity mismatches, non-finite angles or a bad prep count.
    void validate() const;
    bool operator==(const QuantumCircuit&) const = default;
};

struct NoiseSpec {
    double depolarizing_p = 0.0;  ///< weight of I/16 mixed into the final state

    void validate() const;
};

/// Counts in the order (+,g), (+,e), (-,g), (-,e).
struct ShotResult {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::array<std::uint64_t, 4> counts{};

    enum Outcome : std::size_t { kPlusG = 0, kPlusE = 1, kMinusG = 2, kMinusE = 3 };
};

struct Angles {
    double theta = 0.0;  ///< omega * lambda * t / 2, the exchange angle
    double phi = 0.0;    ///< omega * t / 2, the free-evolution angle
};

Angles angles_of_time(const ModelParams& params, double t);

/// Prep (H on D, X on both chargers) followed by four controlled charging
/// blocks: D=|0> runs (Q,C1) then (Q,C2), D=|1> runs (Q,C2) then (Q,C1).
QuantumCircuit build_ico_circuit(double theta, double phi);
/// Single-angle entry point: phi = theta / lambda.
QuantumCircuit build_ico_circuit(double theta, const ModelParams& params);

/// Unitary of one gate in its own qubit order (2x2 or 4x4, first qubit most significant).
DenseOperator gate_unitary(const Gate& gate);

/// 16x16 unitary on [D, Q, C1, C2] of the charging gates (plus prep if asked).
DenseOperator circuit_unitary(const QuantumCircuit& circuit, bool include_preparation = false);

/// min over global phase of the Frobenius distance between a and b.
double phase_insensitive_distance(const DenseOperator& a, const DenseOperator& b);

/// Final 4-qubit density operator from |0000>; (1-p) rho + p I/16 when noisy.
DenseOperator simulate(const QuantumCircuit& circuit, const NoiseSpec& noise);

/// Born probabilities of (D in x basis, Q in z basis), ShotResult order.
std::array<double, 4> outcome_probabilities(const DenseOperator& rho);

/// Draws `shots` outcomes from `probs` with a generator owned by this call.
ShotResult sample_probabilities(const std::array<double, 4>& probs, std::uint64_t shots, std::uint64_t seed);
ShotResult sample(const QuantumCircuit& circuit, const NoiseSpec& noise, std::uint64_t shots, std::uint64_t seed);

/// Mixes a base seed with a grid index (splitmix64), for per-point generators.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct ShotEstimate {
    EnergyReport report;  ///< E, W, P from counts; passive_dco is not observable and left true
    double p_plus = 0.0;
    double se_p_plus = 0.0;
    double se_E = 0.0;
    double se_W = 0.0;
    std::optional<double> se_P;
    bool empty_branch = false;  ///< a switch outcome never occurred; it contributed 0
};

/// Point estimates with plug-in binomial / delta-method standard errors.
ShotEstimate estimate(const ShotResult& result);
/// Same, from (possibly fractional) relative frequencies and a shot count.
ShotEstimate estimate(const std::array<double, 4>& frequencies, double shots);

}  // namespace icobat::circuit
