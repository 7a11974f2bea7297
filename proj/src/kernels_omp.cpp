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

#include "icobat/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace icobat::kernels::omp {

namespace {

inline std::size_t insert_zero(std::size_t k, std::size_t stride) {
    return (k / stride) * (2 * stride) + k % stride;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n) {
    assert(a.size() == n * n && b.size() == n * n && out.size() == n * n);
    const auto rows = static_cast<std::int64_t>(n);
    // Rows of `out` are independent; each thread owns whole rows.
#pragma omp parallel for schedule(static) if (n * n * n >= kParallelThreshold * 64)
    for (std::int64_t ii = 0; ii < rows; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        cplx* row = out.data() + i * n;
        std::fill(row, row + n, cplx{});
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik == cplx{}) continue;
            const cplx* brow = b.data() + k * n;
            for (std::size_t j = 0; j < n; ++j) {
                row[j] += aik * brow[j];
            }
        }
    }
}

void apply_one_site(std::span<cplx> state, std::size_t stride, std::span<const cplx, 4> gate) {
    const auto half = static_cast<std::int64_t>(state.size() / 2);
    const cplx g00 = gate[0], g01 = gate[1], g10 = gate[2], g11 = gate[3];
#pragma omp parallel for schedule(static) if (state.size() >= kParallelThreshold)
    for (std::int64_t kk = 0; kk < half; ++kk) {
        const std::size_t i0 = insert_zero(static_cast<std::size_t>(kk), stride);
        const std::size_t i1 = i0 + stride;
        const cplx v0 = state[i0];
        const cplx v1 = state[i1];
        state[i0] = g00 * v0 + g01 * v1;
        state[i1] = g10 * v0 + g11 * v1;
    }
}

void apply_two_site(std::span<cplx> state, std::size_t stride_a, std::size_t stride_b,
                    std::span<const cplx, 16> gate) {
    assert(stride_a != stride_b);
    const std::size_t lo = std::min(stride_a, stride_b);
    const std::size_t hi = std::max(stride_a, stride_b);
    const auto quarter = static_cast<std::int64_t>(state.size() / 4);
    cplx g[16];
    std::copy(gate.begin(), gate.end(), g);
#pragma omp parallel for schedule(static) if (state.size() >= kParallelThreshold)
    for (std::int64_t kk = 0; kk < quarter; ++kk) {
        const std::size_t base = insert_zero(insert_zero(static_cast<std::size_t>(kk), hi / 2), lo);
        const std::size_t idx[4] = {base, base + stride_b, base + stride_a, base + stride_a + stride_b};
        const cplx v[4] = {state[idx[0]], state[idx[1]], state[idx[2]], state[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            state[idx[r]] = g[4 * r] * v[0] + g[4 * r + 1] * v[1] + g[4 * r + 2] * v[2] + g[4 * r + 3] * v[3];
        }
    }
}

void reduce_pure(std::span<const cplx> psi, std::span<const std::size_t> table, std::size_t keep_dim,
                 std::size_t env_dim, std::span<cplx> out) {
    assert(table.size() == keep_dim * env_dim && out.size() == keep_dim * keep_dim);
    const auto cells = static_cast<std::int64_t>(keep_dim * keep_dim);
#pragma omp parallel for schedule(static) if (keep_dim * keep_dim * env_dim >= kParallelThreshold)
    for (std::int64_t cell = 0; cell < cells; ++cell) {
        const std::size_t a = static_cast<std::size_t>(cell) / keep_dim;
        const std::size_t b = static_cast<std::size_t>(cell) % keep_dim;
        const std::size_t* ta = table.data() + a * env_dim;
        const std::size_t* tb = table.data() + b * env_dim;
        cplx acc{};
        for (std::size_t e = 0; e < env_dim; ++e) {
            acc += psi[ta[e]] * std::conj(psi[tb[e]]);
        }
        out[static_cast<std::size_t>(cell)] = acc;
    }
}

void partial_trace(std::span<const cplx> rho, std::size_t dim, std::span<const std::size_t> table,
                   std::size_t keep_dim, std::size_t env_dim, std::span<cplx> out) {
    assert(rho.size() == dim * dim && out.size() == keep_dim * keep_dim);
    const auto cells = static_cast<std::int64_t>(keep_dim * keep_dim);
#pragma omp parallel for schedule(static) if (keep_dim * keep_dim * env_dim >= kParallelThreshold)
    for (std::int64_t cell = 0; cell < cells; ++cell) {
        const std::size_t a = static_cast<std::size_t>(cell) / keep_dim;
        const std::size_t b = static_cast<std::size_t>(cell) % keep_dim;
        const std::size_t* ta = table.data() + a * env_dim;
        const std::size_t* tb = table.data() + b * env_dim;
        cplx acc{};
        for (std::size_t e = 0; e < env_dim; ++e) {
            acc += rho[ta[e] * dim + tb[e]];
        }
        out[static_cast<std::size_t>(cell)] = acc;
    }
}

}  // namespace icobat::kernels::omp
