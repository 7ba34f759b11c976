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

#ifndef QCORR_LINALG_HPP
#define QCORR_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qcorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Eigenvalues at or below this magnitude are treated as exactly zero.
inline constexpr double kZeroThreshold = 1e-12;

/// Largest tolerated |m - m^dagger| entry for input to hermitian_eig.
inline constexpr double kHermitianTolerance = 1e-9;

/// Eigen-decomposition of a Hermitian operator.
///
/// Eigenvalues are sorted descending; column i of `eigenvectors` belongs to
/// `eigenvalues[i]`. Eigenvector phases and the order of degenerate
/// eigenvalues are unspecified.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    Eigen::Index dim() const { return eigenvectors.rows(); }
    ComplexMatrix reconstruct() const;
};

/// max_ij |a_ij|
double max_abs(const ComplexMatrix &m);

/// max_ij |m_ij - conj(m_ji)|. Requires a square matrix.
double hermiticity_defect(const ComplexMatrix &m);

/// Throws NonFinite if any entry is NaN or infinite.
void require_finite(const ComplexMatrix &m);

Spectrum hermitian_eig(const ComplexMatrix &m);

/// Applies a real function to a Hermitian operator through its spectrum:
/// f(M) = sum_i f(lambda_i) |v_i><v_i|.
template <typename F>
ComplexMatrix spectral_function(const Spectrum &s, F &&f) {
    Eigen::VectorXcd values(s.dim());
    for (Eigen::Index i = 0; i < s.dim(); ++i) {
        values(i) = Complex(f(s.eigenvalues[static_cast<std::size_t>(i)]), 0.0);
    }
    return s.eigenvectors * values.asDiagonal() * s.eigenvectors.adjoint();
}

/// Base-2 matrix logarithm with the 0 log 0 = 0 convention: eigenvalues in
/// [-zero_threshold, zero_threshold] map to 0. Throws NegativeEigenvalue
/// below -zero_threshold.
ComplexMatrix matrix_log2(const Spectrum &s, double zero_threshold = kZeroThreshold);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

Complex trace(const ComplexMatrix &m);

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

} // namespace qcorr

#endif // QCORR_LINALG_HPP
