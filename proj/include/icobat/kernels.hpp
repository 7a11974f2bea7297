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

// Data-parallel kernels on raw complex buffers.
//
// Every kernel exists twice with identical signatures: `serial` is the
// straightforward reference, `omp` splits the outer loop across OpenMP
// threads. Library code calls the `omp` variants; tests hold the two
// against each other.

#include <complex>
#include <cstddef>
#include <span>

namespace icobat::kernels {

using cplx = std::complex<double>;

/// Loop sizes below this run single-threaded inside the `omp` variants.
inline constexpr std::size_t kParallelThreshold = 1 << 12;

namespace serial {

/// out = a * b for row-major n x n matrices. `out` must not alias the inputs.
void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n);

/// Applies a row-major 2x2 gate to the two-level site with the given stride.
void apply_one_site(std::span<cplx> state, std::size_t stride, std::span<const cplx, 4> gate);

/// Applies a row-major 4x4 gate to the two-level sites with strides `stride_a`
/// and `stride_b`. Gate basis index is 2*digit_a + digit_b.
void apply_two_site(std::span<cplx> state, std::size_t stride_a, std::size_t stride_b,
                    std::span<const cplx, 16> gate);

/// out[a][b] = sum_e psi[table[a][e]] * conj(psi[table[b][e]]).
///
/// `table` is a keep_dim x env_dim row-major map from (kept, traced) digit
/// pairs to flat register indices.
void reduce_pure(std::span<const cplx> psi, std::span<const std::size_t> table, std::size_t keep_dim,
                 std::size_t env_dim, std::span<cplx> out);

/// out[a][b] = sum_e rho[table[a][e]][table[b][e]] for a dim x dim row-major rho.
void partial_trace(std::span<const cplx> rho, std::size_t dim, std::span<const std::size_t> table,
                   std::size_t keep_dim, std::size_t env_dim, std::span<cplx> out);

}  // namespace serial

namespace omp {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out, std::size_t n);
void apply_one_site(std::span<cplx> state, std::size_t stride, std::span<const cplx, 4> gate);
void apply_two_site(std::span<cplx> state, std::size_t stride_a, std::size_t stride_b,
                    std::span<const cplx, 16> gate);
void reduce_pure(std::span<const cplx> psi, std::span<const std::size_t> table, std::size_t keep_dim,
                 std::size_t env_dim, std::span<cplx> out);
void partial_trace(std::span<const cplx> rho, std::size_t dim, std::span<const std::size_t> table,
                   std::size_t keep_dim, std::size_t env_dim, std::span<cplx> out);

/// Number of threads an `omp` kernel would use (1 when built without OpenMP).
int max_threads();

}  // namespace omp

}  // namespace icobat::kernels
