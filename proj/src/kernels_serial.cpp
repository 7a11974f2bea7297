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

namespace icobat::kernels::serial {

namespace {

// Inserts a zero digit for a two-level site of the given stride.
inline std::size_t insert_zero(std::size_t k, std::size_t stride) {
    return (k / stride) * (2 * stride) + k % stride;
}

}  // namespace

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n) {
    assert(a.size() == n * n && b.size() == n * n && out.size() == n * n);
    std::fill(out.begin(), out.end(), cplx{});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
}

void apply_one_site(std::span<cplx> state, std::size_t stride, std::span<const cplx, 4> gate) {
    const std::size_t half = state.size() / 2;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero(k, stride);
        const std::size_t i1 = i0 + stride;
        const cplx v0 = state[i0];
        const cplx v1 = state[i1];
        state[i0] = gate[0] * v0 + gate[1] * v1;
        state[i1] = gate[2] * v0 + gate[3] * v1;
    }
}

void apply_two_site(std::span<cplx> state, std::size_t stride_a, std::size_t stride_b,
                    std::span<const cplx, 16> gate) {
    assert(stride_a != stride_b);
    const std::size_t lo = std::min(stride_a, stride_b);
    const std::size_t hi = std::max(stride_a, stride_b);
    const std::size_t quarter = state.size() / 4;
    for (std::size_t k = 0; k < quarter; ++k) {
        const std::size_t base = insert_zero(insert_zero(k, hi / 2), lo);
        const std::size_t idx[4] = {base, base + stride_b, base + stride_a, base + stride_a + stride_b};
        const cplx v[4] = {state[idx[0]], state[idx[1]], state[idx[2]], state[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            state[idx[r]] = gate[4 * r] * v[0] + gate[4 * r + 1] * v[1] + gate[4 * r + 2] * v[2] +
                            gate[4 * r + 3] * v[3];
        }
    }
}

void reduce_pure(std::span<const cplx> psi, std::span<const std::size_t> table, std::size_t keep_dim,
                 std::size_t env_dim, std::span<cplx> out) {
    assert(table.size() == keep_dim * env_dim && out.size() == keep_dim * keep_dim);
    for (std::size_t a = 0; a < keep_dim; ++a) {
        for (std::size_t b = 0; b < keep_dim; ++b) {
            cplx acc{};
            for (std::size_t e = 0; e < env_dim; ++e) {
                acc += psi[table[a * env_dim + e]] * std::conj(psi[table[b * env_dim + e]]);
            }
            out[a * keep_dim + b] = acc;
        }
    }
}

void partial_trace(std::span<const cplx> rho, std::size_t dim, std::span<const std::size_t> table,
                   std::size_t keep_dim, std::size_t env_dim, std::span<cplx> out) {
    assert(rho.size() == dim * dim && out.size() == keep_dim * keep_dim);
    for (std::size_t a = 0; a < keep_dim; ++a) {
        for (std::size_t b = 0; b < keep_dim; ++b) {
            cplx acc{};
            for (std::size_t e = 0; e < env_dim; ++e) {
                acc += rho[table[a * env_dim + e] * dim + table[b * env_dim + e]];
            }
            out[a * keep_dim + b] = acc;
        }
    }
}

}  // namespace icobat::kernels::serial
