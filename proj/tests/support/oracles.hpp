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

// Independent reference computations used only by the tests. Nothing here
// calls partial_trace, the EntropyTable or relative_entropy.

#ifndef QCORR_TESTS_ORACLES_HPP
#define QCORR_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr::oracle {

/// Partial trace by explicit reordering: permute the parties so the kept
/// ones come first, then sum the diagonal blocks of the traced tail.
inline ComplexMatrix reduce_by_permutation(const ComplexMatrix &rho, const std::vector<int> &dims,
                                           const std::vector<int> &keep_labels) {
    const int n = static_cast<int>(dims.size());
    std::vector<int> order; // new position -> old party index (0-based)
    for (int label : keep_labels) order.push_back(label - 1);
    for (int p = 0; p < n; ++p) {
        if (std::find(keep_labels.begin(), keep_labels.end(), p + 1) == keep_labels.end()) order.push_back(p);
    }
    const Eigen::Index total = rho.rows();
    // Permutation matrix mapping old basis index -> new basis index.
    ComplexMatrix perm = ComplexMatrix::Zero(total, total);
    for (Eigen::Index old_idx = 0; old_idx < total; ++old_idx) {
        std::vector<Eigen::Index> digits(static_cast<std::size_t>(n));
        Eigen::Index rem = old_idx;
        for (int p = n - 1; p >= 0; --p) {
            digits[static_cast<std::size_t>(p)] = rem % dims[static_cast<std::size_t>(p)];
            rem /= dims[static_cast<std::size_t>(p)];
        }
        Eigen::Index new_idx = 0;
        for (int q = 0; q < n; ++q) {
            const int p = order[static_cast<std::size_t>(q)];
            new_idx = new_idx * dims[static_cast<std::size_t>(p)] + digits[static_cast<std::size_t>(p)];
        }
        perm(new_idx, old_idx) = 1.0;
    }
    const ComplexMatrix moved = perm * rho * perm.adjoint();

    Eigen::Index kept_dim = 1;
    for (int label : keep_labels) kept_dim *= dims[static_cast<std::size_t>(label - 1)];
    const Eigen::Index traced_dim = total / kept_dim;
    ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
    for (Eigen::Index i = 0; i < kept_dim; ++i) {
        for (Eigen::Index j = 0; j < kept_dim; ++j) {
            for (Eigen::Index t = 0; t < traced_dim; ++t) out(i, j) += moved(i * traced_dim + t, j * traced_dim + t);
        }
    }
    return out;
}

/// Shannon entropy in bits.
inline double shannon_bits(const std::vector<double> &p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) h -= x * std::log2(x);
    }
    return h;
}

/// S(rho||sigma) through operator logarithms: tr(rho log2 rho) - tr(rho log2 sigma).
/// Only meaningful for full-rank sigma.
inline double relative_entropy_via_logm(const ComplexMatrix &rho, const ComplexMatrix &sigma) {
    const ComplexMatrix log_rho = matrix_log2(hermitian_eig(rho));
    const ComplexMatrix log_sigma = matrix_log2(hermitian_eig(sigma));
    return (rho * log_rho).trace().real() - (rho * log_sigma).trace().real();
}

/// Entropy through the operator logarithm: -tr(rho log2 rho).
inline double entropy_via_logm(const ComplexMatrix &rho) {
    return -(rho * matrix_log2(hermitian_eig(rho))).trace().real();
}

} // namespace qcorr::oracle

#endif // QCORR_TESTS_ORACLES_HPP
