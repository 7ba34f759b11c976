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

#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

void require_square(const ComplexMatrix &m, const char *what) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::NonSquare, std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()));
    }
}

} // namespace

ComplexMatrix Spectrum::reconstruct() const {
    return spectral_function(*this, [](double x) { return x; });
}

double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix &m) {
    require_square(m, "hermiticity_defect");
    return max_abs(m - m.adjoint());
}

void require_finite(const ComplexMatrix &m) {
    if (!m.allFinite()) {
        throw Error(ErrorKind::NonFinite, "matrix has NaN or infinite entries");
    }
}

Spectrum hermitian_eig(const ComplexMatrix &m) {
    require_square(m, "hermitian_eig");
    require_finite(m);
    const double defect = hermiticity_defect(m);
    if (defect > kHermitianTolerance) {
        throw Error(ErrorKind::NonHermitian, "hermitian_eig: |m - m^dagger|_max = " + std::to_string(defect), defect);
    }
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NonFinite, "hermitian_eig: eigensolver did not converge");
    }

    // Eigen returns ascending order; reorder descending, stable on ties.
    const auto n = static_cast<std::size_t>(h.rows());
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto &values = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values(static_cast<Eigen::Index>(a)) > values(static_cast<Eigen::Index>(b));
    });

    Spectrum s;
    s.eigenvalues.reserve(n);
    s.eigenvectors.resize(h.rows(), h.cols());
    for (std::size_t i = 0; i < n; ++i) {
        const auto src = static_cast<Eigen::Index>(order[i]);
        s.eigenvalues.push_back(values(src));
        s.eigenvectors.col(static_cast<Eigen::Index>(i)) = solver.eigenvectors().col(src);
    }
    return s;
}

ComplexMatrix matrix_log2(const Spectrum &s, double zero_threshold) {
    for (double lambda : s.eigenvalues) {
        if (lambda < -zero_threshold) {
            throw Error(ErrorKind::NegativeEigenvalue, "matrix_log2: eigenvalue " + std::to_string(lambda), -lambda);
        }
    }
    return spectral_function(s, [zero_threshold](double lambda) {
        return lambda > zero_threshold ? std::log2(lambda) : 0.0;
    });
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Complex trace(const ComplexMatrix &m) {
    require_square(m, "trace");
    return m.trace();
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "frobenius_distance: " + std::to_string(a.rows()) + "x" +
                                                      std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                                      "x" + std::to_string(b.cols()));
    }
    return (a - b).norm();
}

} // namespace qcorr
