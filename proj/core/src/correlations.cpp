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

#include "qcorr/correlations.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

double clamp_nonnegative(double value, const char *what) {
    if (value < -kClampTolerance) {
        throw Error(ErrorKind::NegativeBeyondTolerance, std::string(what) + " = " + std::to_string(value) +
                                                            " is below -" + std::to_string(kClampTolerance),
                    -value);
    }
    return value < 0.0 ? 0.0 : value;
}

// sum over eigenvalues above the zero threshold of lambda log2 lambda.
double neg_entropy_of(const std::vector<double> &eigenvalues) {
    double acc = 0.0;
    for (double lambda : eigenvalues) {
        if (lambda > kZeroThreshold) acc += lambda * std::log2(lambda);
    }
    return acc;
}

void require_parties_at_least(const DensityOperator &rho, int n, ErrorKind kind, const char *what) {
    if (rho.parties() < n) {
        throw Error(kind, std::string(what) + " needs at least " + std::to_string(n) + " parties, got " +
                              std::to_string(rho.parties()));
    }
}

void require_k(int k, int lo, int hi, const char *what) {
    if (k < lo || k > hi) {
        const std::string range = lo > hi ? "none for this arity" : std::to_string(lo) + ".." + std::to_string(hi);
        throw Error(ErrorKind::BadK, std::string(what) + ": k = " + std::to_string(k) + " outside valid range (" + range + ")");
    }
}

} // namespace

double von_neumann_entropy(const DensityOperator &rho) {
    const Spectrum s = hermitian_eig(rho.matrix());
    const double raw = -neg_entropy_of(s.eigenvalues);
    const double max_entropy = std::log2(static_cast<double>(rho.dim()));
    if (raw > max_entropy + kClampTolerance) {
        throw Error(ErrorKind::NegativeBeyondTolerance,
                    "entropy " + std::to_string(raw) + " exceeds log2(D) = " + std::to_string(max_entropy));
    }
    return std::min(clamp_nonnegative(raw, "von Neumann entropy"), max_entropy);
}

double relative_entropy(const DensityOperator &rho, const DensityOperator &sigma) {
    if (!(rho.shape() == sigma.shape())) {
        throw Error(ErrorKind::ShapeMismatch,
                    "relative_entropy: shapes " + rho.shape().to_string() + " and " + sigma.shape().to_string());
    }
    const double rho_log_rho = neg_entropy_of(hermitian_eig(rho.matrix()).eigenvalues);

    const Spectrum s = hermitian_eig(sigma.matrix());
    // Weights of rho along sigma's eigenvectors: <v_j| rho |v_j>.
    const ComplexMatrix projected = s.eigenvectors.adjoint() * rho.matrix() * s.eigenvectors;
    double rho_log_sigma = 0.0;
    for (Eigen::Index j = 0; j < s.dim(); ++j) {
        const double weight = projected(j, j).real();
        const double mu = s.eigenvalues[static_cast<std::size_t>(j)];
        if (mu > kZeroThreshold) {
            rho_log_sigma += weight * std::log2(mu);
        } else if (weight > kSupportWeightThreshold) {
            return std::numeric_limits<double>::infinity();
        }
    }
    return clamp_nonnegative(rho_log_rho - rho_log_sigma, "relative entropy");
}

double mutual_information(const DensityOperator &rho, const SubsystemSet &cut) {
    const int n = rho.parties();
    if (cut.labels().back() > n || cut.size() >= n) {
        throw Error(ErrorKind::BadCut, "cut " + cut.to_string() + " is not a proper subset of 1.." + std::to_string(n));
    }
    const SubsystemSet rest = cut.complement(n);
    const double value = von_neumann_entropy(partial_trace(rho, cut)) + von_neumann_entropy(partial_trace(rho, rest)) -
                         von_neumann_entropy(rho);
    return clamp_nonnegative(value, "mutual information");
}

double retc(const DensityOperator &rho) {
    require_parties_at_least(rho, 2, ErrorKind::SinglePartySystem, "retc");
    double sum = 0.0;
    for (int s = 1; s <= rho.parties(); ++s) sum += von_neumann_entropy(partial_trace(rho, SubsystemSet{s}));
    return clamp_nonnegative(sum - von_neumann_entropy(rho), "retc");
}

double marginal_mi_sum(const DensityOperator &rho, int k) {
    require_k(k, 1, rho.parties() - 2, "marginal_mi_sum");
    return EntropyTable(rho).marginal_mi_sum(k);
}

double marginal_entropy_sum(const DensityOperator &rho, int k) {
    require_k(k, 1, rho.parties() - 1, "marginal_entropy_sum");
    return EntropyTable(rho).marginal_entropy_sum(k);
}

double pure_distribution_rhs(const DensityOperator &rho, int k) {
    require_k(k, 1, rho.parties() - 2, "pure_distribution_rhs");
    return EntropyTable(rho).pure_distribution_rhs(k);
}

double residual_correlation(const DensityOperator &rho) {
    if (rho.parties() != 3) {
        throw Error(ErrorKind::WrongArity,
                    "residual correlation is defined for 3 parties, got " + std::to_string(rho.parties()));
    }
    return EntropyTable(rho).residual();
}

std::vector<DensityOperator> single_party_marginals(const DensityOperator &rho) {
    std::vector<DensityOperator> out;
    out.reserve(static_cast<std::size_t>(rho.parties()));
    for (int s = 1; s <= rho.parties(); ++s) out.push_back(partial_trace(rho, SubsystemSet{s}));
    return out;
}

DensityOperator closest_product_state(const DensityOperator &rho) {
    require_parties_at_least(rho, 2, ErrorKind::SinglePartySystem, "closest_product_state");
    const auto marginals = single_party_marginals(rho);
    return tensor(marginals);
}

double decomposition_identity_gap(const DensityOperator &rho, std::span<const DensityOperator> sigmas) {
    const int n = rho.parties();
    if (static_cast<int>(sigmas.size()) != n) {
        throw Error(ErrorKind::ShapeMismatch, "need one sigma per party: " + std::to_string(n) + " expected, got " +
                                                  std::to_string(sigmas.size()));
    }
    for (int s = 1; s <= n; ++s) {
        const auto &sigma = sigmas[static_cast<std::size_t>(s - 1)];
        if (sigma.parties() != 1 || sigma.dim() != rho.shape().local_dim(s)) {
            throw Error(ErrorKind::ShapeMismatch, "sigma_" + std::to_string(s) + " has shape " +
                                                      sigma.shape().to_string() + ", party " + std::to_string(s) +
                                                      " has dimension " + std::to_string(rho.shape().local_dim(s)));
        }
    }
    const auto marginals = single_party_marginals(rho);
    const double against_sigmas = relative_entropy(rho, tensor(sigmas));
    const double against_marginals = relative_entropy(rho, tensor(marginals));
    double local_terms = 0.0;
    for (std::size_t s = 0; s < marginals.size(); ++s) local_terms += relative_entropy(marginals[s], sigmas[s]);
    if (std::isinf(against_sigmas) || std::isinf(against_marginals) || std::isinf(local_terms)) {
        throw Error(ErrorKind::InfiniteTerm, "a relative entropy in the decomposition is infinite (support condition)");
    }
    return std::abs(against_sigmas - against_marginals - local_terms);
}

// ---------------------------------------------------------------------------
// EntropyTable

EntropyTable::EntropyTable(const DensityOperator &rho) : parties_(rho.parties()) {
    if (parties_ > 16) {
        throw Error(ErrorKind::BadArity, "EntropyTable supports at most 16 parties");
    }
    const unsigned count = 1u << parties_;
    by_mask_.assign(count, 0.0);
    for (unsigned mask = 1; mask < count; ++mask) {
        std::vector<int> labels;
        for (int s = 1; s <= parties_; ++s) {
            if (mask & (1u << (s - 1))) labels.push_back(s);
        }
        by_mask_[mask] = von_neumann_entropy(partial_trace(rho, SubsystemSet(std::move(labels))));
    }
}

unsigned EntropyTable::mask_of(const SubsystemSet &x) {
    unsigned mask = 0;
    for (int label : x.labels()) mask |= 1u << (label - 1);
    return mask;
}

double EntropyTable::entropy(const SubsystemSet &x) const {
    x.require_within(parties_);
    return by_mask_[mask_of(x)];
}

double EntropyTable::single(int label) const { return entropy(SubsystemSet{label}); }

double EntropyTable::total() const { return by_mask_.back(); }

double EntropyTable::total_correlation(const SubsystemSet &x) const {
    double sum = 0.0;
    for (int label : x.labels()) sum += single(label);
    return clamp_nonnegative(sum - entropy(x), "total correlation");
}

double EntropyTable::mutual_information(const SubsystemSet &x, const SubsystemSet &y) const {
    std::vector<int> joint = x.labels();
    for (int label : y.labels()) {
        if (x.contains(label)) {
            throw Error(ErrorKind::BadCut, "mutual information of overlapping sets " + x.to_string() + " and " +
                                               y.to_string());
        }
        joint.push_back(label);
    }
    return clamp_nonnegative(entropy(x) + entropy(y) - entropy(SubsystemSet(std::move(joint))), "mutual information");
}

double EntropyTable::retc() const {
    if (parties_ < 2) {
        throw Error(ErrorKind::SinglePartySystem, "retc needs at least 2 parties");
    }
    return total_correlation(SubsystemSet::all(parties_));
}

double EntropyTable::marginal_mi_sum(int k) const {
    require_k(k, 1, parties_ - 2, "marginal_mi_sum");
    double sum = 0.0;
    for (const auto &x : subsets_of_size(parties_, parties_ - k)) sum += total_correlation(x);
    return sum;
}

double EntropyTable::marginal_entropy_sum(int k) const {
    require_k(k, 1, parties_ - 1, "marginal_entropy_sum");
    double sum = 0.0;
    for (const auto &x : subsets_of_size(parties_, k)) sum += entropy(x);
    return sum;
}

double EntropyTable::bipartite_mi_sum() const {
    if (parties_ < 2) {
        throw Error(ErrorKind::SinglePartySystem, "bipartite_mi_sum needs at least 2 parties");
    }
    double sum = 0.0;
    for (const auto &pair : subsets_of_size(parties_, 2)) sum += total_correlation(pair);
    return sum;
}

double EntropyTable::pure_distribution_rhs(int k) const {
    require_k(k, 1, parties_ - 2, "pure_distribution_rhs");
    if (total() > kPurityTolerance) {
        throw Error(ErrorKind::NotPure, "state has entropy " + std::to_string(total()) + " > " +
                                            std::to_string(kPurityTolerance), total());
    }
    double k_factorial = 1.0;
    double falling = 1.0;
    for (int i = 1; i <= k; ++i) {
        k_factorial *= i;
        falling *= parties_ - i;
    }
    return k_factorial * (marginal_mi_sum(k) + marginal_entropy_sum(k)) / falling;
}

double EntropyTable::residual() const {
    if (parties_ != 3) {
        throw Error(ErrorKind::WrongArity, "residual correlation is defined for 3 parties, got " + std::to_string(parties_));
    }
    const double value = retc() - (2.0 / 3.0) * bipartite_mi_sum();
    if (value < -1e-8) {
        throw Error(ErrorKind::NegativeBeyondTolerance, "residual correlation = " + std::to_string(value), -value);
    }
    return value < 0.0 ? 0.0 : value;
}

CorrelationProfile correlation_profile(const EntropyTable &table, const SystemShape &shape) {
    const int n = table.parties();
    CorrelationProfile p{shape, 0.0, {}, 0.0, 0.0, std::nullopt, {}, {}};
    p.total_entropy = table.total();
    for (int s = 1; s <= n; ++s) p.marginal_entropies.push_back(table.single(s));
    if (n >= 2) {
        p.retc = table.retc();
        p.bipartite_mi_sum = table.bipartite_mi_sum();
    }
    if (n == 3) p.residual = table.residual();
    for (int k = 1; k <= n - 2; ++k) p.marginal_mi_sums[k] = table.marginal_mi_sum(k);
    for (int k = 1; k <= n - 1; ++k) p.marginal_entropy_sums[k] = table.marginal_entropy_sum(k);
    return p;
}

CorrelationProfile correlation_profile(const DensityOperator &rho) {
    return correlation_profile(EntropyTable(rho), rho.shape());
}

} // namespace qcorr
