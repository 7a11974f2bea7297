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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <array>
#include <complex>
#include <random>
#include <vector>

#include "icobat/kernels.hpp"

namespace {

using icobat::kernels::cplx;
namespace serial = icobat::kernels::serial;
namespace omp = icobat::kernels::omp;

std::vector<cplx> random_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<cplx> v(n);
    for (cplx& z : v) z = {g(rng), g(rng)};
    return v;
}

template <auto Kernel>
void BM_Matmul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_vector(n * n, 1);
    const auto b = random_vector(n * n, 2);
    std::vector<cplx> out(n * n);
    for (auto _ : state) {
        Kernel(a, b, out, n);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * n));
}

template <auto Kernel>
void BM_TwoSite(benchmark::State& state) {
    const auto qubits = static_cast<std::size_t>(state.range(0));
    auto psi = random_vector(std::size_t{1} << qubits, 3);
    const auto g = random_vector(16, 4);
    std::array<cplx, 16> gate{};
    std::copy(g.begin(), g.end(), gate.begin());
    for (auto _ : state) {
        Kernel(psi, std::size_t{1} << (qubits - 1), 1, gate);
        benchmark::DoNotOptimize(psi.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.size()));
}

template <auto Kernel>
void BM_PartialTrace(benchmark::State& state) {
    const auto env = static_cast<std::size_t>(state.range(0));
    const std::size_t keep = 2;
    const std::size_t dim = keep * env;
    const auto rho = random_vector(dim * dim, 5);
    std::vector<std::size_t> table(keep * env);
    for (std::size_t a = 0; a < keep; ++a)
        for (std::size_t e = 0; e < env; ++e) table[a * env + e] = a * env + e;
    std::vector<cplx> out(keep * keep);
    for (auto _ : state) {
        Kernel(rho, dim, table, keep, env, out);
        benchmark::DoNotOptimize(out.data());
    }
}

BENCHMARK_TEMPLATE(BM_Matmul, serial::matmul)->Arg(16)->Arg(64)->Arg(160);
BENCHMARK_TEMPLATE(BM_Matmul, omp::matmul)->Arg(16)->Arg(64)->Arg(160);
BENCHMARK_TEMPLATE(BM_TwoSite, serial::apply_two_site)->Arg(8)->Arg(14)->Arg(18);
BENCHMARK_TEMPLATE(BM_TwoSite, omp::apply_two_site)->Arg(8)->Arg(14)->Arg(18);
BENCHMARK_TEMPLATE(BM_PartialTrace, serial::partial_trace)->Arg(64)->Arg(1024);
BENCHMARK_TEMPLATE(BM_PartialTrace, omp::partial_trace)->Arg(64)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
