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

#include <array>
#include <random>
#include <vector>

#include "icobat/kernels.hpp"
#include "icobat/qmat.hpp"
#include "support.hpp"

namespace icobat {
namespace {

namespace ks = kernels::serial;
namespace ko = kernels::omp;

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

TEST(Kernels, MatmulParallelMatchesSerial) {
    std::mt19937_64 rng(11);
    for (std::size_t n : {3u, 17u, 96u}) {
        const auto a = testing::random_entries(rng, n * n);
        const auto b = testing::random_entries(rng, n * n);
        std::vector<cplx> s(n * n);
        std::vector<cplx> p(n * n);
        ks::matmul(a, b, s, n);
        ko::matmul(a, b, p, n);
        EXPECT_LT(max_diff(s, p), 1e-12) << "n=" << n;
    }
}

TEST(Kernels, TwoSiteGateMatchesDenseKronecker) {
    // Register of 4 qubits; gate on qubits (1, 3) with qubit 0 most significant.
    std::mt19937_64 rng(12);
    const auto gate_entries = testing::random_entries(rng, 16);
    std::array<cplx, 16> gate{};
    std::copy(gate_entries.begin(), gate_entries.end(), gate.begin());
    const auto psi0 = testing::random_entries(rng, 16);

    std::vector<cplx> want(16);
    for (std::size_t out = 0; out < 16; ++out) {
        for (std::size_t in = 0; in < 16; ++in) {
            const std::size_t o_rest = out & 0b1010;
            const std::size_t i_rest = in & 0b1010;
            if (o_rest != i_rest) continue;
            const std::size_t o_pair = 2 * ((out >> 2) & 1) + (out & 1);
            const std::size_t i_pair = 2 * ((in >> 2) & 1) + (in & 1);
            want[out] += gate[o_pair * 4 + i_pair] * psi0[in];
        }
    }
    std::vector<cplx> s = psi0;
    ks::apply_two_site(s, 4, 1, gate);
    EXPECT_LT(max_diff(s, want), 1e-12);

    // Reversed stride order swaps the gate's qubit roles.
    std::vector<cplx> want_rev(16);
    for (std::size_t out = 0; out < 16; ++out) {
        for (std::size_t in = 0; in < 16; ++in) {
            if ((out & 0b1010) != (in & 0b1010)) continue;
            const std::size_t o_pair = 2 * (out & 1) + ((out >> 2) & 1);
            const std::size_t i_pair = 2 * (in & 1) + ((in >> 2) & 1);
            want_rev[out] += gate[o_pair * 4 + i_pair] * psi0[in];
        }
    }
    std::vector<cplx> r = psi0;
    ks::apply_two_site(r, 1, 4, gate);
    EXPECT_LT(max_diff(r, want_rev), 1e-12);
}

TEST(Kernels, OneSiteGateMatchesDenseKronecker) {
    std::mt19937_64 rng(13);
    const auto g = testing::random_entries(rng, 4);
    std::array<cplx, 4> gate{g[0], g[1], g[2], g[3]};
    const auto psi0 = testing::random_entries(rng, 8);
    std::vector<cplx> want(8);
    for (std::size_t out = 0; out < 8; ++out)
        for (std::size_t in = 0; in < 8; ++in)
            if ((out & 0b101) == (in & 0b101)) want[out] += gate[((out >> 1) & 1) * 2 + ((in >> 1) & 1)] * psi0[in];
    std::vector<cplx> s = psi0;
    ks::apply_one_site(s, 2, gate);
    EXPECT_LT(max_diff(s, want), 1e-12);
}

TEST(Kernels, GateApplicationParallelMatchesSerialAboveThreshold) {
    std::mt19937_64 rng(14);
    const std::size_t qubits = 14;  // 16384 amplitudes, above the parallel threshold
    const auto psi0 = testing::random_entries(rng, std::size_t{1} << qubits);
    const auto g2 = testing::random_entries(rng, 16);
    const auto g1 = testing::random_entries(rng, 4);
    std::array<cplx, 16> gate2{};
    std::copy(g2.begin(), g2.end(), gate2.begin());
    std::array<cplx, 4> gate1{g1[0], g1[1], g1[2], g1[3]};
    for (auto [a, b] : {std::pair<std::size_t, std::size_t>{1, 1024}, {8192, 2}, {64, 32}}) {
        std::vector<cplx> s = psi0;
        std::vector<cplx> p = psi0;
        ks::apply_two_site(s, a, b, gate2);
        ko::apply_two_site(p, a, b, gate2);
        EXPECT_LT(max_diff(s, p), 1e-12);
        ks::apply_one_site(s, a, gate1);
        ko::apply_one_site(p, a, gate1);
        EXPECT_LT(max_diff(s, p), 1e-12);
    }
}

TEST(Kernels, ReductionsParallelMatchSerial) {
    std::mt19937_64 rng(15);
    const std::size_t keep = 2;
    const std::size_t env = 4096;
    std::vector<std::size_t> table(keep * env);
    for (std::size_t a = 0; a < keep; ++a)
        for (std::size_t e = 0; e < env; ++e) table[a * env + e] = e * keep + a;
    const auto psi = testing::random_entries(rng, keep * env);
    std::vector<cplx> s(keep * keep);
    std::vector<cplx> p(keep * keep);
    ks::reduce_pure(psi, table, keep, env, s);
    ko::reduce_pure(psi, table, keep, env, p);
    EXPECT_LT(max_diff(s, p), 1e-9);

    const std::size_t small_env = 64;
    const std::size_t dim = keep * small_env;
    std::vector<std::size_t> t2(keep * small_env);
    for (std::size_t a = 0; a < keep; ++a)
        for (std::size_t e = 0; e < small_env; ++e) t2[a * small_env + e] = a * small_env + e;
    const auto rho = testing::random_entries(rng, dim * dim);
    ks::partial_trace(rho, dim, t2, keep, small_env, s);
    ko::partial_trace(rho, dim, t2, keep, small_env, p);
    EXPECT_LT(max_diff(s, p), 1e-12);
    cplx tr_s = s[0] + s[3];
    cplx tr_rho = 0.0;
    for (std::size_t i = 0; i < dim; ++i) tr_rho += rho[i * dim + i];
    EXPECT_LT(std::abs(tr_s - tr_rho), 1e-10);
}

TEST(Kernels, ThreadCountIsPositive) { EXPECT_GE(ko::max_threads(), 1); }

}  // namespace
}  // namespace icobat
