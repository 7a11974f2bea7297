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

/// Named numerical tolerances used by validity checks throughout the library.
namespace icobat::tol {

inline constexpr double kHermitian = 1e-12;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kNorm = 1e-12;
inline constexpr double kTrace = 1e-12;
/// Smallest eigenvalue a density operator may have.
inline constexpr double kPsd = -1e-12;
inline constexpr double kProjector = 1e-10;
inline constexpr double kEigReconstruction = 1e-10;

/// Branch weights below this leave the conditional state undefined.
inline constexpr double kNegligibleWeight = 1e-12;
/// Ergotropy at or below this counts as passive.
inline constexpr double kPassive = 1e-12;
/// Efficiency W/E is reported undefined when E falls below this (units of hbar*omega).
inline constexpr double kEnergyFloor = 1e-9;
/// Maximum disagreement between the numeric and closed-form engines.
inline constexpr double kEngineAgreement = 1e-9;
/// Slack for W_ico >= W_dco.
inline constexpr double kDominance = 1e-10;

}  // namespace icobat::tol
