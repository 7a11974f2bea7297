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

// Dense complex linear algebra over labeled tensor-product Hilbert spaces.
//
// Basis indices are mixed-radix encodings of per-subsystem digits with the
// leftmost layout entry most significant. All values are immutable after
// construction in the sense that every operation returns a fresh object.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace icobat {

using cplx = std::complex<double>;

struct Subsystem {
    std::string label;
    std::size_t dim = 1;

    bool operator==(const Subsystem&) const = default;
};

/// Ordered list of labeled subsystems.
class SubsystemLayout {
  public:
    SubsystemLayout() = default;
    /// Throws std::invalid_argument on duplicate labels or zero dimensions.
    explicit SubsystemLayout(std::vector<Subsystem> parts);
    SubsystemLayout(std::initializer_list<Subsystem> parts);

    /// [D (dim n), Q, C1..Cn], the register used by the charging protocol.
    static SubsystemLayout protocol(int n_chargers);
    /// [Q, C1..Cn].
    static SubsystemLayout battery_and_chargers(int n_chargers);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return parts_.size(); }
    const Subsystem& operator[](std::size_t pos) const { return parts_[pos]; }
    const std::vector<Subsystem>& parts() const { return parts_; }

    bool contains(std::string_view label) const;
    /// Position of a label; throws std::invalid_argument if unknown.
    std::size_t position(std::string_view label) const;
    /// Product of the dimensions to the right of `pos`.
    std::size_t stride(std::size_t pos) const;

    std::vector<std::size_t> digits(std::size_t flat) const;
    std::size_t flat(std::span<const std::size_t> digits) const;

    /// Layout followed by `other`; labels must stay unique.
    SubsystemLayout concat(const SubsystemLayout& other) const;
    /// Sub-layout of the given positions, in ascending position order.
    SubsystemLayout select(std::span<const std::size_t> positions) const;

    bool operator==(const SubsystemLayout& other) const { return parts_ == other.parts_; }

  private:
    std::vector<Subsystem> parts_;
    std::size_t dim_ = 1;
};

/// Vector of amplitudes over a layout. Not required to be normalized; use
/// `is_normalized` where the invariant matters.
class PureState {
  public:
    PureState() = default;
    PureState(SubsystemLayout layout, std::vector<cplx> amplitudes);
    /// Computational basis state |index>.
    static PureState basis(SubsystemLayout layout, std::size_t index);

    const SubsystemLayout& layout() const { return layout_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const cplx> amplitudes() const { return amps_; }
    std::span<cplx> mutable_amplitudes() { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;
    bool is_normalized(double tol = 1e-12) const;
    PureState scaled(cplx factor) const;

  private:
    SubsystemLayout layout_;
    std::vector<cplx> amps_;
};

cplx inner(const PureState& bra, const PureState& ket);

/// Square complex matrix over a layout, stored row-major.
class DenseOperator {
  public:
    DenseOperator() = default;
    /// Zero operator.
    explicit DenseOperator(SubsystemLayout layout);
    DenseOperator(SubsystemLayout layout, std::vector<cplx> entries);

    static DenseOperator identity(SubsystemLayout layout);
    /// Single unnamed subsystem of dimension `dim`, filled from nested rows.
    static DenseOperator from_rows(std::string label, std::initializer_list<std::initializer_list<cplx>> rows);
    static DenseOperator diagonal(SubsystemLayout layout, std::span<const cplx> diag);
    /// |psi><psi|.
    static DenseOperator outer(const PureState& psi);

    const SubsystemLayout& layout() const { return layout_; }
    std::size_t dim() const { return layout_.dim(); }
    cplx operator()(std::size_t r, std::size_t c) const { return entries_[r * dim() + c]; }
    cplx& at(std::size_t r, std::size_t c) { return entries_[r * dim() + c]; }
    std::span<const cplx> entries() const { return entries_; }
    std::span<cplx> mutable_entries() { return entries_; }

    /// Same entries under a different layout of equal dimension.
    DenseOperator relabeled(SubsystemLayout layout) const;

    DenseOperator adjoint() const;
    cplx trace() const;
    DenseOperator operator*(const DenseOperator& rhs) const;
    DenseOperator operator+(const DenseOperator& rhs) const;
    DenseOperator operator-(const DenseOperator& rhs) const;
    DenseOperator scaled(cplx factor) const;
    PureState apply(const PureState& psi) const;

    bool is_hermitian(double tol = 1e-12) const;
    bool is_unitary(double tol = 1e-10) const;
    bool is_projector(double tol = 1e-10) const;
    /// Hermitian, eigenvalues >= -tol, and trace equal to `weight` within tol.
    bool is_density(double tol = 1e-12, double weight = 1.0) const;

  private:
    SubsystemLayout layout_;
    std::vector<cplx> entries_;
};

/// Largest entry-wise modulus of a - b.
double max_abs_diff(const DenseOperator& a, const DenseOperator& b);
double max_abs_diff(const PureState& a, const PureState& b);
double frobenius_norm(const DenseOperator& a);

DenseOperator tensor(const DenseOperator& a, const DenseOperator& b);
PureState tensor(const PureState& a, const PureState& b);

/// Reduced operator on the kept labels, in their original relative order.
/// Throws std::invalid_argument for unknown or repeated labels.
DenseOperator partial_trace(const DenseOperator& op, std::span<const std::string> keep);
DenseOperator partial_trace(const DenseOperator& op, std::initializer_list<std::string> keep);
/// Partial trace of |psi><psi| without forming the full outer product.
DenseOperator reduced_density(const PureState& psi, std::span<const std::string> keep);
DenseOperator reduced_density(const PureState& psi, std::initializer_list<std::string> keep);

struct EigenDecomposition {
    std::vector<double> values;  ///< ascending
    DenseOperator vectors;       ///< column k pairs with values[k]
};

/// Throws std::invalid_argument if `h` is not Hermitian within 1e-12.
EigenDecomposition hermitian_eig(const DenseOperator& h);

/// exp(-i s h) through the spectral decomposition of `h`.
DenseOperator exp_neg_i(const DenseOperator& h, double s);

struct Projection {
    double weight = 0.0;  ///< Tr[P rho P]
    DenseOperator state;  ///< P rho P, unnormalized
};

/// Throws std::invalid_argument unless `proj` is an orthogonal projector.
Projection project_unnormalized(const DenseOperator& rho, const DenseOperator& proj);

}  // namespace icobat
