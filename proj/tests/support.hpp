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

// Shared helpers for the unit tests: seeded random operators and brute-force
// reference implementations that do not go through the library kernels.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "icobat/qmat.hpp"

namespace icobat::testing {

inline std::vector<cplx> random_entries(std::mt19937_64& rng, std::size_t count) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> out(count);
    for (cplx& z : out) z = {g(rng), g(rng)};
    return out;
}

inline PureState random_state(std::mt19937_64& rng, const SubsystemLayout& layout) {
    std::vector<cplx> a = random_entries(rng, layout.dim());
    double norm = 0.0;
    for (const cplx& z : a) norm += std::norm(z);
    for (cplx& z : a) z /= std::sqrt(norm);
    return PureState(layout, std::move(a));
}

inline DenseOperator random_matrix(std::mt19937_64& rng, const SubsystemLayout& layout) {
    return DenseOperator(layout, random_entries(rng, layout.dim() * layout.dim()));
}

inline DenseOperator random_hermitian(std::mt19937_64& rng, const SubsystemLayout& layout) {
    const DenseOperator a = random_matrix(rng, layout);
    return (a + a.adjoint()).scaled(0.5);
}

/// Naive triple loop product.
inline DenseOperator naive_product(const DenseOperator& a, const DenseOperator& b) {
    const std::size_t n = a.dim();
    std::vector<cplx> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            out[i * n + j] = s;
        }
    }
    return DenseOperator(a.layout(), std::move(out));
}

/// Kronecker product written from the index definition.
inline DenseOperator naive_kron(const DenseOperator& a, const DenseOperator& b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    std::vector<cplx> out(da * db * da * db);
    for (std::size_t i1 = 0; i1 < da; ++i1)
        for (std::size_t j1 = 0; j1 < da; ++j1)
            for (std::size_t i2 = 0; i2 < db; ++i2)
                for (std::size_t j2 = 0; j2 < db; ++j2)
                    out[(i1 * db + i2) * da * db + (j1 * db + j2)] = a(i1, j1) * b(i2, j2);
    return DenseOperator(a.layout().concat(b.layout()), std::move(out));
}

/// exp(-i s h) by a Taylor series after scaling, independent of any eigensolver.
inline DenseOperator taylor_exp_neg_i(const DenseOperator& h, double s) {
    double norm = 0.0;
    for (const cplx& z : h.entries()) norm += std::norm(z);
    norm = std::sqrt(norm) * std::abs(s);
    int squarings = 0;
    while (norm > 0.25) {
        norm *= 0.5;
        ++squarings;
    }
    const DenseOperator a = h.scaled(cplx(0.0, -s / std::pow(2.0, squarings)));
    DenseOperator term = DenseOperator::identity(h.layout());
    DenseOperator sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = naive_product(term, a).scaled(1.0 / k);
        sum = sum + term;
    }
    for (int i = 0; i < squarings; ++i) sum = naive_product(sum, sum);
    return sum;
}

}  // namespace icobat::testing
