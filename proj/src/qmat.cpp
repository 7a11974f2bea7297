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

#include "icobat/qmat.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "icobat/kernels.hpp"
#include "icobat/tolerances.hpp"

namespace icobat {

// ---------------------------------------------------------------------------
// SubsystemLayout

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].dim == 0) {
            throw std::invalid_argument("subsystem '" + parts_[i].label + "' has zero dimension");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (parts_[j].label == parts_[i].label) {
                throw std::invalid_argument("duplicate subsystem label '" + parts_[i].label + "'");
            }
        }
        dim_ *= parts_[i].dim;
    }
}

SubsystemLayout::SubsystemLayout(std::initializer_list<Subsystem> parts)
    : SubsystemLayout(std::vector<Subsystem>(parts)) {}

SubsystemLayout SubsystemLayout::protocol(int n_chargers) {
    if (n_chargers < 1) throw std::invalid_argument("need at least one charger");
    std::vector<Subsystem> parts{{"D", static_cast<std::size_t>(n_chargers)}};
    const SubsystemLayout rest = battery_and_chargers(n_chargers);
    parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
    return SubsystemLayout(std::move(parts));
}

SubsystemLayout SubsystemLayout::battery_and_chargers(int n_chargers) {
    if (n_chargers < 1) throw std::invalid_argument("need at least one charger");
    std::vector<Subsystem> parts{{"Q", 2}};
    for (int l = 1; l <= n_chargers; ++l) parts.push_back({"C" + std::to_string(l), 2});
    return SubsystemLayout(std::move(parts));
}

bool SubsystemLayout::contains(std::string_view label) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const Subsystem& s) { return s.label == label; });
}

std::size_t SubsystemLayout::position(std::string_view label) const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].label == label) return i;
    }
    throw std::invalid_argument("unknown subsystem label '" + std::string(label) + "'");
}

std::size_t SubsystemLayout::stride(std::size_t pos) const {
    std::size_t s = 1;
    for (std::size_t i = pos + 1; i < parts_.size(); ++i) s *= parts_[i].dim;
    return s;
}

std::vector<std::size_t> SubsystemLayout::digits(std::size_t flat) const {
    std::vector<std::size_t> out(parts_.size());
    for (std::size_t i = parts_.size(); i-- > 0;) {
        out[i] = flat % parts_[i].dim;
        flat /= parts_[i].dim;
    }
    return out;
}

std::size_t SubsystemLayout::flat(std::span<const std::size_t> digits) const {
    if (digits.size() != parts_.size()) throw std::invalid_argument("digit count does not match layout");
    std::size_t out = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (digits[i] >= parts_[i].dim) throw std::out_of_range("digit exceeds subsystem dimension");
        out = out * parts_[i].dim + digits[i];
    }
    return out;
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& other) const {
    std::vector<Subsystem> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return SubsystemLayout(std::move(parts));
}

SubsystemLayout SubsystemLayout::select(std::span<const std::size_t> positions) const {
    std::vector<std::size_t> sorted(positions.begin(), positions.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Subsystem> parts;
    for (std::size_t p : sorted) parts.push_back(parts_.at(p));
    return SubsystemLayout(std::move(parts));
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(SubsystemLayout layout, std::vector<cplx> amplitudes)
    : layout_(std::move(layout)), amps_(std::move(amplitudes)) {
    if (amps_.size() != layout_.dim()) throw std::invalid_argument("amplitude count does not match layout");
}

PureState PureState::basis(SubsystemLayout layout, std::size_t index) {
    std::vector<cplx> amps(layout.dim());
    amps.at(index) = 1.0;
    return PureState(std::move(layout), std::move(amps));
}

double PureState::norm_squared() const {
    double acc = 0.0;
    for (const cplx& a : amps_) acc += std::norm(a);
    return acc;
}

bool PureState::is_normalized(double tol) const { return std::abs(std::sqrt(norm_squared()) - 1.0) <= tol; }

PureState PureState::scaled(cplx factor) const {
    std::vector<cplx> amps = amps_;
    for (cplx& a : amps) a *= factor;
    return PureState(layout_, std::move(amps));
}

cplx inner(const PureState& bra, const PureState& ket) {
    if (bra.dim() != ket.dim()) throw std::invalid_argument("inner product of states with different dimension");
    cplx acc{};
    for (std::size_t i = 0; i < bra.dim(); ++i) acc += std::conj(bra[i]) * ket[i];
    return acc;
}

// ---------------------------------------------------------------------------
// DenseOperator

DenseOperator::DenseOperator(SubsystemLayout layout)
    : layout_(std::move(layout)), entries_(layout_.dim() * layout_.dim()) {}

DenseOperator::DenseOperator(SubsystemLayout layout, std::vector<cplx> entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
    if (entries_.size() != layout_.dim() * layout_.dim()) {
        throw std::invalid_argument("entry count does not match layout dimension");
    }
}

DenseOperator DenseOperator::identity(SubsystemLayout layout) {
    DenseOperator out(std::move(layout));
    for (std::size_t i = 0; i < out.dim(); ++i) out.at(i, i) = 1.0;
    return out;
}

DenseOperator DenseOperator::from_rows(std::string label, std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t n = rows.size();
    std::vector<cplx> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw std::invalid_argument("from_rows needs a square matrix");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return DenseOperator(SubsystemLayout{{std::move(label), n}}, std::move(entries));
}

DenseOperator DenseOperator::diagonal(SubsystemLayout layout, std::span<const cplx> diag) {
    DenseOperator out(std::move(layout));
    if (diag.size() != out.dim()) throw std::invalid_argument("diagonal length does not match layout");
    for (std::size_t i = 0; i < out.dim(); ++i) out.at(i, i) = diag[i];
    return out;
}

DenseOperator DenseOperator::outer(const PureState& psi) {
    DenseOperator out(psi.layout());
    const std::size_t n = psi.dim();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = psi[r] * std::conj(psi[c]);
    }
    return out;
}

DenseOperator DenseOperator::relabeled(SubsystemLayout layout) const {
    if (layout.dim() != dim()) throw std::invalid_argument("relabel to a layout of different dimension");
    return DenseOperator(std::move(layout), entries_);
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out(layout_);
    const std::size_t n = dim();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out.at(c, r) = std::conj((*this)(r, c));
    }
    return out;
}

cplx DenseOperator::trace() const {
    cplx acc{};
    for (std::size_t i = 0; i < dim(); ++i) acc += (*this)(i, i);
    return acc;
}

DenseOperator DenseOperator::operator*(const DenseOperator& rhs) const {
    if (rhs.dim() != dim()) throw std::invalid_argument("operator product with mismatched dimensions");
    DenseOperator out(layout_);
    kernels::omp::matmul(entries_, rhs.entries_, out.entries_, dim());
    return out;
}

DenseOperator DenseOperator::operator+(const DenseOperator& rhs) const {
    if (rhs.dim() != dim()) throw std::invalid_argument("operator sum with mismatched dimensions");
    DenseOperator out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

DenseOperator DenseOperator::operator-(const DenseOperator& rhs) const {
    if (rhs.dim() != dim()) throw std::invalid_argument("operator difference with mismatched dimensions");
    DenseOperator out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

DenseOperator DenseOperator::scaled(cplx factor) const {
    DenseOperator out = *this;
    for (cplx& e : out.entries_) e *= factor;
    return out;
}

PureState DenseOperator::apply(const PureState& psi) const {
    if (psi.dim() != dim()) throw std::invalid_argument("operator applied to state of different dimension");
    const std::size_t n = dim();
    std::vector<cplx> out(n);
    for (std::size_t r = 0; r < n; ++r) {
        cplx acc{};
        for (std::size_t c = 0; c < n; ++c) acc += (*this)(r, c) * psi[c];
        out[r] = acc;
    }
    return PureState(psi.layout(), std::move(out));
}

bool DenseOperator::is_hermitian(double tol) const {
    const std::size_t n = dim();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
        }
    }
    return true;
}

bool DenseOperator::is_unitary(double tol) const {
    return max_abs_diff(adjoint() * *this, identity(layout_)) <= tol;
}

bool DenseOperator::is_projector(double tol) const {
    return is_hermitian(tol) && max_abs_diff(*this * *this, *this) <= tol;
}

bool DenseOperator::is_density(double tol, double weight) const {
    if (!is_hermitian(tol)) return false;
    if (std::abs(trace() - cplx{weight}) > tol) return false;
    const auto eig = hermitian_eig(*this);
    return eig.values.front() >= -tol;
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("comparing operators of different dimension");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

double max_abs_diff(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("comparing states of different dimension");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double frobenius_norm(const DenseOperator& a) {
    double acc = 0.0;
    for (const cplx& e : a.entries()) acc += std::norm(e);
    return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// Composition and reduction

DenseOperator tensor(const DenseOperator& a, const DenseOperator& b) {
    DenseOperator out(a.layout().concat(b.layout()));
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    const std::size_t n = na * nb;
    for (std::size_t ra = 0; ra < na; ++ra) {
        for (std::size_t ca = 0; ca < na; ++ca) {
            const cplx x = a(ra, ca);
            for (std::size_t rb = 0; rb < nb; ++rb) {
                for (std::size_t cb = 0; cb < nb; ++cb) {
                    out.mutable_entries()[(ra * nb + rb) * n + ca * nb + cb] = x * b(rb, cb);
                }
            }
        }
    }
    return out;
}

PureState tensor(const PureState& a, const PureState& b) {
    std::vector<cplx> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) amps[i * b.dim() + j] = a[i] * b[j];
    }
    return PureState(a.layout().concat(b.layout()), std::move(amps));
}

namespace {

struct TraceTable {
    SubsystemLayout kept;
    std::size_t env_dim = 1;
    std::vector<std::size_t> table;  // kept.dim() x env_dim
};

TraceTable make_trace_table(const SubsystemLayout& layout, std::span<const std::string> keep) {
    std::vector<bool> is_kept(layout.size(), false);
    std::vector<std::size_t> kept_positions;
    for (const auto& label : keep) {
        const std::size_t p = layout.position(label);
        if (is_kept[p]) throw std::invalid_argument("label '" + label + "' listed twice");
        is_kept[p] = true;
        kept_positions.push_back(p);
    }
    TraceTable out;
    out.kept = layout.select(kept_positions);
    const std::size_t keep_dim = out.kept.dim();
    out.env_dim = layout.dim() / keep_dim;
    out.table.resize(layout.dim());

    // Walk every flat index once and file it under its (kept, env) digit pair.
    for (std::size_t flat = 0; flat < layout.dim(); ++flat) {
        const auto d = layout.digits(flat);
        std::size_t k = 0;
        std::size_t e = 0;
        for (std::size_t p = 0; p < layout.size(); ++p) {
            if (is_kept[p]) {
                k = k * layout[p].dim + d[p];
            } else {
                e = e * layout[p].dim + d[p];
            }
        }
        out.table[k * out.env_dim + e] = flat;
    }
    return out;
}

}  // namespace

DenseOperator partial_trace(const DenseOperator& op, std::span<const std::string> keep) {
    const TraceTable tt = make_trace_table(op.layout(), keep);
    DenseOperator out(tt.kept);
    kernels::omp::partial_trace(op.entries(), op.dim(), tt.table, tt.kept.dim(), tt.env_dim, out.mutable_entries());
    return out;
}

DenseOperator partial_trace(const DenseOperator& op, std::initializer_list<std::string> keep) {
    return partial_trace(op, std::span<const std::string>(keep.begin(), keep.size()));
}

DenseOperator reduced_density(const PureState& psi, std::span<const std::string> keep) {
    const TraceTable tt = make_trace_table(psi.layout(), keep);
    DenseOperator out(tt.kept);
    kernels::omp::reduce_pure(psi.amplitudes(), tt.table, tt.kept.dim(), tt.env_dim, out.mutable_entries());
    return out;
}

DenseOperator reduced_density(const PureState& psi, std::initializer_list<std::string> keep) {
    return reduced_density(psi, std::span<const std::string>(keep.begin(), keep.size()));
}

// ---------------------------------------------------------------------------
// Spectral routines

EigenDecomposition hermitian_eig(const DenseOperator& h) {
    if (!h.is_hermitian(tol::kHermitian)) throw std::invalid_argument("hermitian_eig: operator is not Hermitian");
    const auto n = static_cast<Eigen::Index>(h.dim());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = h(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: eigensolver did not converge");

    EigenDecomposition out;
    out.values.resize(h.dim());
    out.vectors = DenseOperator(h.layout());
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
        for (Eigen::Index r = 0; r < n; ++r) {
            out.vectors.at(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = solver.eigenvectors()(r, k);
        }
    }
    return out;
}

DenseOperator exp_neg_i(const DenseOperator& h, double s) {
    if (!std::isfinite(s)) throw std::invalid_argument("exp_neg_i: non-finite scale");
    const auto eig = hermitian_eig(h);
    const std::size_t n = h.dim();
    // V diag(exp(-i s lambda)) V^dagger
    DenseOperator scaled_vectors = eig.vectors;
    for (std::size_t k = 0; k < n; ++k) {
        const cplx phase = std::polar(1.0, -s * eig.values[k]);
        for (std::size_t r = 0; r < n; ++r) scaled_vectors.at(r, k) *= phase;
    }
    return scaled_vectors * eig.vectors.adjoint();
}

Projection project_unnormalized(const DenseOperator& rho, const DenseOperator& proj) {
    if (proj.dim() != rho.dim()) throw std::invalid_argument("projector dimension does not match state");
    if (!proj.is_projector(tol::kProjector)) throw std::invalid_argument("project_unnormalized: not an orthogonal projector");
    Projection out;
    out.state = (proj * rho * proj).relabeled(rho.layout());
    out.weight = out.state.trace().real();
    return out;
}

}  // namespace icobat
