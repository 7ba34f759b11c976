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

#ifndef QCORR_CORRELATIONS_HPP
#define QCORR_CORRELATIONS_HPP

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qcorr/states.hpp"

namespace qcorr {

// All quantities are in bits.

/// Values in [-kClampTolerance, 0) are rounded up to 0; anything more
/// negative is reported as NegativeBeyondTolerance.
inline constexpr double kClampTolerance = 1e-9;

/// A state "has support" on a direction when its weight there exceeds this.
inline constexpr double kSupportWeightThreshold = 1e-10;

/// S(rho) at or below this counts as pure.
inline constexpr double kPurityTolerance = 1e-8;

/// -sum lambda log2 lambda over eigenvalues above kZeroThreshold.
double von_neumann_entropy(const DensityOperator &rho);

/// S(rho || sigma) = tr(rho log2 rho) - tr(rho log2 sigma).
///
/// Returns +infinity when rho has weight above kSupportWeightThreshold on
/// the kernel of sigma. Throws ShapeMismatch for different shapes.
double relative_entropy(const DensityOperator &rho, const DensityOperator &sigma);

/// S(rho_cut) + S(rho_rest) - S(rho) for a proper, nonempty cut.
double mutual_information(const DensityOperator &rho, const SubsystemSet &cut);

/// Relative entropy of total correlation: sum_s S(rho_s) - S(rho).
double retc(const DensityOperator &rho);

/// Sum of retc over all (n-k)-party reductions, 1 <= k <= n-2.
double marginal_mi_sum(const DensityOperator &rho, int k);

/// Sum of entropies over all k-party reductions, 1 <= k <= n-1.
double marginal_entropy_sum(const DensityOperator &rho, int k);

/// k! (I_{n-k} + S_k) / prod_{i=1..k} (n - i). Equals retc for every pure
/// state; throws NotPure for mixed input.
double pure_distribution_rhs(const DensityOperator &rho, int k);

/// retc(rho) - (2/3) * (sum of pairwise mutual informations), n = 3.
double residual_correlation(const DensityOperator &rho);

std::vector<DensityOperator> single_party_marginals(const DensityOperator &rho);

/// The product of the single-party marginals, which minimizes S(rho || sigma_1 x ... x sigma_n).
DensityOperator closest_product_state(const DensityOperator &rho);

/// |S(rho || x sigma_s) - S(rho || x rho_s) - sum_s S(rho_s || sigma_s)|.
/// Throws InfiniteTerm when any of the divergences is infinite.
double decomposition_identity_gap(const DensityOperator &rho, std::span<const DensityOperator> sigmas);

/// Entropies of every reduction of one state, computed once. All derived
/// measures of the same state read from here so that they share roundoff.
class EntropyTable {
  public:
    explicit EntropyTable(const DensityOperator &rho);

    int parties() const { return parties_; }

    /// S(rho_X); X = {1..n} gives the global entropy.
    double entropy(const SubsystemSet &x) const;
    double single(int label) const;
    double total() const;

    /// Sum of single-party entropies of X minus S(rho_X), clamped.
    double total_correlation(const SubsystemSet &x) const;
    /// S(rho_X) + S(rho_Y) - S(rho_{X u Y}) for disjoint X, Y; clamped.
    double mutual_information(const SubsystemSet &x, const SubsystemSet &y) const;

    double retc() const;
    double marginal_mi_sum(int k) const;
    double marginal_entropy_sum(int k) const;
    /// Sum of I(rho_{ss'}) over all pairs s < s'.
    double bipartite_mi_sum() const;
    double pure_distribution_rhs(int k) const;
    double residual() const;

  private:
    static unsigned mask_of(const SubsystemSet &x);

    int parties_;
    std::vector<double> by_mask_;
};

struct CorrelationProfile {
    SystemShape shape;
    double total_entropy = 0.0;
    std::vector<double> marginal_entropies;
    double retc = 0.0;
    double bipartite_mi_sum = 0.0;
    /// Only for three-party states.
    std::optional<double> residual;
    /// k -> I_{n-k}, 1 <= k <= n-2.
    std::map<int, double> marginal_mi_sums;
    /// k -> S_k, 1 <= k <= n-1.
    std::map<int, double> marginal_entropy_sums;
};

CorrelationProfile correlation_profile(const EntropyTable &table, const SystemShape &shape);
CorrelationProfile correlation_profile(const DensityOperator &rho);

} // namespace qcorr

#endif // QCORR_CORRELATIONS_HPP
