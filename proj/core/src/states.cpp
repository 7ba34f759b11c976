// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

std::string join(const std::vector<int> &v, const char *sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

// Index of |b_1 ... b_n> for n qubits given as a bit string.
Eigen::Index qubit_index(const char *bits) {
    Eigen::Index idx = 0;
    for (const char *c = bits; *c; ++c) idx = 2 * idx + (*c - '0');
    return idx;
}

ComplexVector ghz_amplitudes(int n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    ComplexVector v = ComplexVector::Zero(dim);
    v(0) = v(dim - 1) = 1.0 / std::sqrt(2.0);
    return v;
}

ComplexVector w3_amplitudes() {
    ComplexVector v = ComplexVector::Zero(8);
    const double a = 1.0 / std::sqrt(3.0);
    v(qubit_index("001")) = a;
    v(qubit_index("010")) = a;
    v(qubit_index("100")) = a;
    return v;
}

ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    // Column-major fill order is part of the seed contract.
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

} // namespace

// ---------------------------------------------------------------------------
// SystemShape

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw Error(ErrorKind::InvalidShape, "shape must have at least one party");
    }
    for (int d : dims_) {
        if (d < 2) {
            throw Error(ErrorKind::InvalidShape, "local dimensions must be >= 2, got (" + join(dims_, ",") + ")");
        }
        total_ *= d;
    }
}

int SystemShape::local_dim(int label) const {
    if (label < 1 || label > parties()) {
        throw Error(ErrorKind::BadSubsystemSet,
                    "party " + std::to_string(label) + " outside 1.." + std::to_string(parties()));
    }
    return dims_[static_cast<std::size_t>(label - 1)];
}

std::string SystemShape::to_string() const { return "(" + join(dims_, ",") + ")"; }

// ---------------------------------------------------------------------------
// SubsystemSet

SubsystemSet::SubsystemSet(std::vector<int> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw Error(ErrorKind::BadSubsystemSet, "subsystem set must be nonempty");
    }
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw Error(ErrorKind::BadSubsystemSet, "duplicate party label in {" + join(labels_, ",") + "}");
    }
    if (labels_.front() < 1) {
        throw Error(ErrorKind::BadSubsystemSet, "party labels start at 1, got {" + join(labels_, ",") + "}");
    }
}

SubsystemSet SubsystemSet::all(int n) {
    std::vector<int> labels(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    return SubsystemSet(std::move(labels));
}

bool SubsystemSet::contains(int label) const { return std::binary_search(labels_.begin(), labels_.end(), label); }

void SubsystemSet::require_within(int n) const {
    if (labels_.back() > n) {
        throw Error(ErrorKind::BadSubsystemSet,
                    "subsystem set " + to_string() + " has labels outside 1.." + std::to_string(n));
    }
}

SubsystemSet SubsystemSet::complement(int n) const {
    require_within(n);
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i) {
        if (!contains(i)) rest.push_back(i);
    }
    if (rest.empty()) {
        throw Error(ErrorKind::BadSubsystemSet, "complement of " + to_string() + " in 1.." + std::to_string(n) + " is empty");
    }
    return SubsystemSet(std::move(rest));
}

std::string SubsystemSet::to_string() const { return "{" + join(labels_, ",") + "}"; }

std::vector<SubsystemSet> subsets_of_size(int n, int k) {
    std::vector<SubsystemSet> out;
    if (k < 1 || k > n) return out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator DensityOperator::create(SystemShape shape, ComplexMatrix matrix) {
    const Eigen::Index d = shape.total_dim();
    if (matrix.rows() != d || matrix.cols() != d) {
        throw Error(ErrorKind::DimensionMismatch, "shape " + shape.to_string() + " needs a " + std::to_string(d) + "x" +
                                                      std::to_string(d) + " matrix, got " +
                                                      std::to_string(matrix.rows()) + "x" +
                                                      std::to_string(matrix.cols()));
    }
    require_finite(matrix);

    const double defect = hermiticity_defect(matrix);
    if (defect > kStateTolerance) {
        throw Error(ErrorKind::InvariantViolation,
                    "invariant 'hermiticity' violated: |rho - rho^dagger|_max = " + std::to_string(defect), defect);
    }
    const double trace_error = std::abs(matrix.trace() - Complex(1.0, 0.0));
    if (trace_error > kStateTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "invariant 'trace' violated: |tr(rho) - 1| = " << trace_error;
        throw Error(ErrorKind::InvariantViolation, os.str(), trace_error);
    }
    const Spectrum s = hermitian_eig(matrix);
    const double min_eig = s.eigenvalues.back();
    if (min_eig < -kStateTolerance) {
        throw Error(ErrorKind::InvariantViolation,
                    "invariant 'positivity' violated: minimum eigenvalue = " + std::to_string(min_eig), -min_eig);
    }
    return DensityOperator(std::move(shape), std::move(matrix));
}

DensityOperator from_pure(const SystemShape &shape, const ComplexVector &amplitudes) {
    if (amplitudes.size() != shape.total_dim()) {
        throw Error(ErrorKind::LengthMismatch, "shape " + shape.to_string() + " needs " +
                                                   std::to_string(shape.total_dim()) + " amplitudes, got " +
                                                   std::to_string(amplitudes.size()));
    }
    const double norm = amplitudes.norm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kStateTolerance) {
        throw Error(ErrorKind::BadNorm, "amplitude vector has norm " + std::to_string(norm), std::abs(norm - 1.0));
    }
    return DensityOperator::create(shape, amplitudes * amplitudes.adjoint());
}

DensityOperator partial_trace(const DensityOperator &rho, const SubsystemSet &keep) {
    const SystemShape &shape = rho.shape();
    const int n = shape.parties();
    keep.require_within(n);
    if (keep.size() == n) return rho;

    std::vector<int> kept_dims;
    for (int label : keep.labels()) kept_dims.push_back(shape.local_dim(label));
    SystemShape reduced_shape(std::move(kept_dims));

    // Split every global index into (kept index, traced index).
    const Eigen::Index total = shape.total_dim();
    std::vector<Eigen::Index> kept_of(static_cast<std::size_t>(total));
    std::vector<Eigen::Index> traced_of(static_cast<std::size_t>(total));
    for (Eigen::Index idx = 0; idx < total; ++idx) {
        Eigen::Index rem = idx;
        Eigen::Index kept = 0, kept_stride = 1;
        Eigen::Index traced = 0, traced_stride = 1;
        for (int label = n; label >= 1; --label) {
            const int d = shape.local_dim(label);
            const Eigen::Index digit = rem % d;
            rem /= d;
            if (keep.contains(label)) {
                kept += digit * kept_stride;
                kept_stride *= d;
            } else {
                traced += digit * traced_stride;
                traced_stride *= d;
            }
        }
        kept_of[static_cast<std::size_t>(idx)] = kept;
        traced_of[static_cast<std::size_t>(idx)] = traced;
    }

    const Eigen::Index out_dim = reduced_shape.total_dim();
    ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
    const ComplexMatrix &m = rho.matrix();
    for (Eigen::Index c = 0; c < total; ++c) {
        const auto tc = traced_of[static_cast<std::size_t>(c)];
        const auto kc = kept_of[static_cast<std::size_t>(c)];
        for (Eigen::Index r = 0; r < total; ++r) {
            if (traced_of[static_cast<std::size_t>(r)] == tc) {
                out(kept_of[static_cast<std::size_t>(r)], kc) += m(r, c);
            }
        }
    }
    return DensityOperator(std::move(reduced_shape), std::move(out));
}

DensityOperator trace_out(const DensityOperator &rho, const SubsystemSet &drop) {
    return partial_trace(rho, drop.complement(rho.parties()));
}

DensityOperator tensor(std::span<const DensityOperator> parts) {
    if (parts.empty()) {
        throw Error(ErrorKind::BadArity, "tensor of an empty list");
    }
    std::vector<int> dims = parts.front().shape().dims();
    ComplexMatrix m = parts.front().matrix();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto &more = parts[i].shape().dims();
        dims.insert(dims.end(), more.begin(), more.end());
        m = kron(m, parts[i].matrix());
    }
    return DensityOperator(SystemShape(std::move(dims)), std::move(m));
}

DensityOperator tensor(std::initializer_list<DensityOperator> parts) {
    return tensor(std::span<const DensityOperator>(parts.begin(), parts.size()));
}

DensityOperator maximally_mixed(int dim) {
    SystemShape shape{dim};
    ComplexMatrix m = ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    return DensityOperator::create(std::move(shape), std::move(m));
}

DensityOperator ghz(int n) {
    if (n < 2 || n > 10) {
        throw Error(ErrorKind::BadArity, "ghz needs 2 <= n <= 10, got " + std::to_string(n));
    }
    return from_pure(SystemShape(std::vector<int>(static_cast<std::size_t>(n), 2)), ghz_amplitudes(n));
}

DensityOperator w3() { return from_pure(SystemShape{2, 2, 2}, w3_amplitudes()); }

DensityOperator wghz_mixture(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::BadParameter, "mixture weight p must lie in [0,1], got " + std::to_string(p));
    }
    const ComplexVector w = w3_amplitudes();
    const ComplexVector g = ghz_amplitudes(3);
    ComplexMatrix m = p * (w * w.adjoint()) + (1.0 - p) * (g * g.adjoint());
    return DensityOperator::create(SystemShape{2, 2, 2}, std::move(m));
}

DensityOperator classical_chi(std::span<const double> probabilities, const SystemShape &local_dims) {
    if (probabilities.empty()) {
        throw Error(ErrorKind::BadDistribution, "empty probability vector");
    }
    double sum = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw Error(ErrorKind::BadDistribution, "probabilities must be finite and nonnegative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw Error(ErrorKind::BadDistribution, "probabilities sum to " + std::to_string(sum), std::abs(sum - 1.0));
    }
    const int min_dim = *std::min_element(local_dims.dims().begin(), local_dims.dims().end());
    if (static_cast<int>(probabilities.size()) > min_dim) {
        throw Error(ErrorKind::TooManyOutcomes, std::to_string(probabilities.size()) +
                                                    " outcomes exceed the smallest local dimension " +
                                                    std::to_string(min_dim));
    }

    const Eigen::Index dim = local_dims.total_dim();
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        // Index of |i i ... i>.
        Eigen::Index idx = 0;
        for (int d : local_dims.dims()) idx = idx * d + static_cast<Eigen::Index>(i);
        m(idx, idx) = probabilities[i];
    }
    return DensityOperator::create(local_dims, std::move(m));
}

DensityOperator random_pure(const SystemShape &shape, Rng &rng) {
    ComplexVector v = gaussian_matrix(shape.total_dim(), 1, rng).col(0);
    v.normalize();
    return from_pure(shape, v);
}

DensityOperator random_pure(const SystemShape &shape, std::uint64_t seed) {
    Rng rng(seed);
    return random_pure(shape, rng);
}

DensityOperator random_mixed(const SystemShape &shape, int rank, Rng &rng) {
    if (rank < 1 || rank > shape.total_dim()) {
        throw Error(ErrorKind::BadRank, "rank must lie in 1.." + std::to_string(shape.total_dim()) + ", got " +
                                            std::to_string(rank));
    }
    const ComplexMatrix g = gaussian_matrix(shape.total_dim(), rank, rng);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace().real();
    // Remove the rounding-level anti-Hermitian part of the product.
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityOperator::create(shape, std::move(m));
}

DensityOperator random_mixed(const SystemShape &shape, int rank, std::uint64_t seed) {
    Rng rng(seed);
    return random_mixed(shape, rank, rng);
}

std::vector<double> random_distribution(int outcomes, Rng &rng) {
    if (outcomes < 1) {
        throw Error(ErrorKind::BadParameter, "need at least one outcome");
    }
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> p(static_cast<std::size_t>(outcomes));
    double sum = 0.0;
    for (double &x : p) {
        x = expo(rng);
        sum += x;
    }
    for (double &x : p) x /= sum;
    return p;
}

} // namespace qcorr
