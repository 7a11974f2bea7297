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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "icobat/model.hpp"
#include "icobat/protocol.hpp"
#include "icobat/thermo.hpp"
#include "support.hpp"

namespace icobat {
namespace {

DenseOperator diag_state(std::initializer_list<double> pops) {
    std::vector<cplx> d(pops.begin(), pops.end());
    return DenseOperator::diagonal(SubsystemLayout{{"Q", d.size()}}, d);
}

DenseOperator random_density(std::mt19937_64& rng, std::size_t dim) {
    const DenseOperator a = testing::random_matrix(rng, SubsystemLayout{{"Q", dim}});
    const DenseOperator rho = a * a.adjoint();
    return rho.scaled(1.0 / rho.trace().real());
}

// Minimum over all permutations of sum_k r_k e_pi(k), with r the spectrum of rho.
double brute_force_ergotropy(const DenseOperator& rho, const DenseOperator& h) {
    std::vector<double> r = hermitian_eig(rho).values;
    std::vector<double> e = hermitian_eig(h).values;
    std::sort(e.begin(), e.end());
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> perm(e.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        double s = 0.0;
        for (std::size_t k = 0; k < e.size(); ++k) s += r[k] * e[perm[k]];
        best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return (rho * h).trace().real() - best;
}

TEST(Ergotropy, QubitExamples) {
    const DenseOperator h = battery_hamiltonian(ModelParams{2, 1.0, 0.1});
    EXPECT_NEAR(ergotropy(diag_state({0.0, 1.0}), h), 1.0, 1e-12);
    EXPECT_NEAR(ergotropy(diag_state({1.0, 0.0}), h), 0.0, 1e-12);
    EXPECT_NEAR(ergotropy(diag_state({0.3, 0.7}), h), 0.4, 1e-12);
    EXPECT_NEAR(ergotropy(diag_state({0.5, 0.5}), h), 0.0, 1e-12);
    EXPECT_TRUE(is_passive(diag_state({0.6, 0.4}), h));
    EXPECT_FALSE(is_passive(diag_state({0.4, 0.6}), h));
    // |+> has energy 0 and a pure passive partner |g>: W = omega/2.
    const DenseOperator plus = DenseOperator::from_rows("Q", {{0.5, 0.5}, {0.5, 0.5}});
    EXPECT_NEAR(ergotropy(plus, h), 0.5, 1e-12);
}

TEST(Ergotropy, MatchesPermutationOracle) {
    std::mt19937_64 rng(31);
    for (std::size_t dim : {2u, 3u, 4u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const DenseOperator rho = random_density(rng, dim);
            const DenseOperator h = testing::random_hermitian(rng, SubsystemLayout{{"Q", dim}});
            EXPECT_NEAR(ergotropy(rho, h), brute_force_ergotropy(rho, h), 1e-10);
        }
    }
}

TEST(PassiveState, IsUnitaryOrbitMinimum) {
    std::mt19937_64 rng(32);
    const SubsystemLayout l{{"Q", 3}};
    for (int trial = 0; trial < 10; ++trial) {
        const DenseOperator rho = random_density(rng, 3);
        const DenseOperator h = testing::random_hermitian(rng, l);
        const DenseOperator passive = passive_state(rho, h);
        EXPECT_TRUE(passive.is_density(1e-10));
        EXPECT_TRUE(is_passive(passive, h));
        const double floor = (passive * h).trace().real();
        // Same spectrum as rho.
        const auto a = hermitian_eig(rho).values;
        const auto b = hermitian_eig(passive).values;
        for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-10);
        for (int k = 0; k < 20; ++k) {
            const DenseOperator u = exp_neg_i(testing::random_hermitian(rng, l), 1.0);
            EXPECT_GE((u * rho * u.adjoint() * h).trace().real(), floor - 1e-10);
        }
    }
}

TEST(DaemonicErgotropy, DominatesErgotropyOfAverage) {
    std::mt19937_64 rng(33);
    const DenseOperator h = battery_hamiltonian(ModelParams{2, 1.0, 0.1});
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double p = u(rng);
        const DenseOperator a = random_density(rng, 2);
        const DenseOperator b = random_density(rng, 2);
        ConditionalEnsemble ens;
        ens.branches = {{p, a}, {1 - p, b}};
        const double wd = daemonic_ergotropy(ens, h);
        EXPECT_NEAR(wd, p * ergotropy(a, h) + (1 - p) * ergotropy(b, h), 1e-12);
        EXPECT_GE(wd, ergotropy(a.scaled(p) + b.scaled(1 - p), h) - 1e-12);
    }
}

TEST(ConditionalEnsemble, Validation) {
    const DenseOperator g = battery_ground_state();
    ConditionalEnsemble ok;
    ok.branches = {{0.25, g}, {0.75, g}};
    EXPECT_NO_THROW(ok.validate());
    ConditionalEnsemble bad_total;
    bad_total.branches = {{0.25, g}, {0.5, g}};
    EXPECT_THROW(bad_total.validate(), std::invalid_argument);
    ConditionalEnsemble negative;
    negative.branches = {{-0.25, g}, {1.25, g}};
    EXPECT_THROW(negative.validate(), std::invalid_argument);
}

TEST(Efficiency, UndefinedBelowEnergyFloor) {
    EXPECT_FALSE(efficiency(0.0, 0.0).has_value());
    EXPECT_FALSE(efficiency(0.0, 5e-10).has_value());
    ASSERT_TRUE(efficiency(0.2, 0.4).has_value());
    EXPECT_DOUBLE_EQ(*efficiency(0.2, 0.4), 0.5);
}

TEST(StoredEnergy, DifferenceOfMeanEnergies) {
    const DenseOperator h = battery_hamiltonian(ModelParams{2, 2.0, 0.1});
    EXPECT_NEAR(stored_energy(diag_state({0.25, 0.75}), battery_ground_state(), h), 1.5, 1e-12);
}

// Closed-form values of the two-charger protocol, written out independently:
// E = 1 - cos^4(w l t / 2), and W_dco vanishes while cos^4 >= 1/2.
TEST(Report, TwoChargerReferencePoints) {
    const ModelParams p{2, 1.0, 0.1};
    {
        const double t = 2 * std::numbers::pi;
        const ProtocolReport r = report(run_ico(p, t), p);
        const double c4 = std::pow(std::cos(p.omega * p.lambda * t / 2), 4);
        EXPECT_NEAR(r.ico.E, 1 - c4, 1e-12);
        EXPECT_NEAR(r.dco.E, r.ico.E, 1e-12);
        EXPECT_NEAR(r.ico.E, 0.181864, 1e-6);
        EXPECT_NEAR(r.ico.W, 0.181750, 1e-6);
        ASSERT_TRUE(r.ico.P.has_value());
        EXPECT_NEAR(*r.ico.P, 0.99937, 1e-5);
        EXPECT_NEAR(r.dco.W, 0.0, 1e-12);
        ASSERT_TRUE(r.dco.P.has_value());
        EXPECT_NEAR(*r.dco.P, 0.0, 1e-12);
        EXPECT_TRUE(r.dco.passive_dco);
        EXPECT_TRUE(r.ico.passive_k1);
    }
    {
        const double t = 4 * std::numbers::pi;
        const ProtocolReport r = report(run_ico(p, t), p);
        const double c4 = std::pow(std::cos(p.omega * p.lambda * t / 2), 4);
        EXPECT_NEAR(r.ico.E, 1 - c4, 1e-12);
        EXPECT_NEAR(r.dco.W, 1 - 2 * c4, 1e-12);
        EXPECT_NEAR(*r.ico.P, 0.250582, 1e-6);
        EXPECT_NEAR(*r.dco.P, 0.250582, 1e-6);
    }
}

TEST(Report, EnergiesScaleWithOmega) {
    // Same dimensionless time, different omega: identical values in units of hbar*omega.
    const ModelParams a{3, 1.0, 0.2};
    const ModelParams b{3, 2.5, 0.2};
    const ProtocolReport ra = report(run_ico(a, 7.0), a);
    const ProtocolReport rb = report(run_ico(b, 7.0 / 2.5), b);
    EXPECT_NEAR(ra.ico.E, rb.ico.E, 1e-12);
    EXPECT_NEAR(ra.ico.W, rb.ico.W, 1e-12);
    EXPECT_NEAR(ra.dco.W, rb.dco.W, 1e-12);
}

TEST(Report, TimeZeroHasUndefinedEfficiency) {
    const ModelParams p{2, 1.0, 0.1};
    const ProtocolReport r = report(run_ico(p, 0.0), p);
    EXPECT_NEAR(r.ico.E, 0.0, 1e-15);
    EXPECT_FALSE(r.ico.P.has_value());
    EXPECT_FALSE(r.dco.P.has_value());
}

}  // namespace
}  // namespace icobat
