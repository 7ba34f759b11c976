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

#ifndef QCORR_STATES_HPP
#define QCORR_STATES_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qcorr/linalg.hpp"

namespace qcorr {

/// Tolerance applied to every DensityOperator invariant (Hermiticity, unit
/// trace, positivity).
inline constexpr double kStateTolerance = 1e-9;

using Rng = std::mt19937_64;

/// Ordered local dimensions d_1..d_n of a multipartite Hilbert space.
/// Party labels are 1-based everywhere in the public interface.
class SystemShape {
  public:
    explicit SystemShape(std::vector<int> dims);
    SystemShape(std::initializer_list<int> dims) : SystemShape(std::vector<int>(dims)) {}

    int parties() const { return static_cast<int>(dims_.size()); }
    /// Local dimension of party `label` (1-based).
    int local_dim(int label) const;
    Eigen::Index total_dim() const { return total_; }
    const std::vector<int> &dims() const { return dims_; }

    std::string to_string() const;

    friend bool operator==(const SystemShape &, const SystemShape &) = default;

  private:
    std::vector<int> dims_;
    Eigen::Index total_ = 1;
};

/// Nonempty, strictly increasing set of 1-based party labels.
class SubsystemSet {
  public:
    /// Sorts the labels; rejects empty input, duplicates and labels < 1.
    explicit SubsystemSet(std::vector<int> labels);
    SubsystemSet(std::initializer_list<int> labels) : SubsystemSet(std::vector<int>(labels)) {}

    /// {1, ..., n}
    static SubsystemSet all(int n);

    const std::vector<int> &labels() const { return labels_; }
    int size() const { return static_cast<int>(labels_.size()); }
    bool contains(int label) const;

    /// Throws BadSubsystemSet if any label exceeds `n`.
    void require_within(int n) const;

    /// Labels of {1..n} not in this set. Throws BadSubsystemSet when empty.
    SubsystemSet complement(int n) const;

    std::string to_string() const;

    friend bool operator==(const SubsystemSet &, const SubsystemSet &) = default;
    friend auto operator<=>(const SubsystemSet &, const SubsystemSet &) = default;

  private:
    std::vector<int> labels_;
};

/// All size-k subsets of {1..n} in lexicographic order.
std::vector<SubsystemSet> subsets_of_size(int n, int k);

/// Hermitian, positive semidefinite, unit-trace operator on a SystemShape.
/// Construction through `create` validates every invariant.
class DensityOperator {
  public:
    /// Throws InvariantViolation naming the failed invariant (hermiticity,
    /// trace or positivity) together with its measured violation, and
    /// DimensionMismatch if the matrix size differs from the shape.
    static DensityOperator create(SystemShape shape, ComplexMatrix matrix);

    const SystemShape &shape() const { return shape_; }
    const ComplexMatrix &matrix() const { return matrix_; }
    int parties() const { return shape_.parties(); }
    Eigen::Index dim() const { return shape_.total_dim(); }

  private:
    DensityOperator(SystemShape shape, ComplexMatrix matrix) : shape_(std::move(shape)), matrix_(std::move(matrix)) {}

    // Operations whose output is valid whenever their inputs are.
    friend DensityOperator partial_trace(const DensityOperator &, const SubsystemSet &);
    friend DensityOperator tensor(std::span<const DensityOperator>);

    SystemShape shape_;
    ComplexMatrix matrix_;
};

/// |psi><psi|. Amplitudes are indexed with party 1 most significant.
DensityOperator from_pure(const SystemShape &shape, const ComplexVector &amplitudes);

/// Reduced operator on `keep`, kept parties in their original order.
DensityOperator partial_trace(const DensityOperator &rho, const SubsystemSet &keep);

/// Traces out `drop`; the reduction onto its complement.
DensityOperator trace_out(const DensityOperator &rho, const SubsystemSet &drop);

DensityOperator tensor(std::span<const DensityOperator> parts);
DensityOperator tensor(std::initializer_list<DensityOperator> parts);

/// Single-party maximally mixed state I/d.
DensityOperator maximally_mixed(int dim);

/// n-qubit GHZ state (|0...0> + |1...1>)/sqrt(2), n >= 2.
DensityOperator ghz(int n);

/// Three-qubit W state (|001> + |010> + |100>)/sqrt(3).
DensityOperator w3();

/// p |W3><W3| + (1-p) |GHZ3><GHZ3|, 0 <= p <= 1.
DensityOperator wghz_mixture(double p);

/// Perfectly correlated classical state sum_i p_i |i...i><i...i| on the
/// given shape, in the computational basis of every party.
DensityOperator classical_chi(std::span<const double> probabilities, const SystemShape &local_dims);

/// Haar-random pure state from a normalized complex Gaussian vector.
DensityOperator random_pure(const SystemShape &shape, Rng &rng);
DensityOperator random_pure(const SystemShape &shape, std::uint64_t seed);

/// Ginibre-induced mixed state G G^dagger / tr(G G^dagger), G of size D x rank.
DensityOperator random_mixed(const SystemShape &shape, int rank, Rng &rng);
DensityOperator random_mixed(const SystemShape &shape, int rank, std::uint64_t seed);

/// Uniform (flat Dirichlet) random probability vector of the given length.
std::vector<double> random_distribution(int outcomes, Rng &rng);

} // namespace qcorr

#endif // QCORR_STATES_HPP
