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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "qcorr/error.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) v(i++) = x;
    return v.asDiagonal();
}

ComplexMatrix random_hermitian(Eigen::Index d, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    ComplexMatrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
    return g + g.adjoint();
}

} // namespace

TEST(hermitian_eig, identity_and_diagonal) {
    const auto id = hermitian_eig(ComplexMatrix::Identity(2, 2));
    EXPECT_DOUBLE_EQ(id.eigenvalues[0], 1.0);
    EXPECT_DOUBLE_EQ(id.eigenvalues[1], 1.0);

    const auto s = hermitian_eig(diag({0.25, 0.75}));
    EXPECT_NEAR(s.eigenvalues[0], 0.75, 1e-15);
    EXPECT_NEAR(s.eigenvalues[1], 0.25, 1e-15);
}

TEST(hermitian_eig, w3_single_qubit_marginal) {
    // Tracing parties 2,3 of |W3> by hand: rho_1 = diag(2/3, 1/3).
    const auto rho1 = partial_trace(w3(), SubsystemSet{1});
    const auto s = hermitian_eig(rho1.matrix());
    EXPECT_NEAR(s.eigenvalues[0], 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(s.eigenvalues[1], 1.0 / 3.0, 1e-12);
}

TEST(hermitian_eig, reconstruction_and_unitarity) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index d = 2 + trial % 15;
        const ComplexMatrix h = random_hermitian(d, rng);
        const Spectrum s = hermitian_eig(h);
        ASSERT_TRUE(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
        EXPECT_LE(max_abs(s.reconstruct() - h), 1e-10);
        EXPECT_LE(max_abs(s.eigenvectors.adjoint() * s.eigenvectors - ComplexMatrix::Identity(d, d)), 1e-10);
    }
}

TEST(hermitian_eig, rejects_bad_input) {
    ComplexMatrix m(2, 3);
    m.setZero();
    try {
        hermitian_eig(m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonSquare);
    }

    ComplexMatrix skew = ComplexMatrix::Zero(2, 2);
    skew(0, 1) = 1e-6;
    try {
        hermitian_eig(skew);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonHermitian);
    }

    // Within the 1e-9 symmetry tolerance is accepted.
    skew(0, 1) = 1e-10;
    EXPECT_NO_THROW(hermitian_eig(skew));
}

TEST(matrix_log2, examples) {
    EXPECT_LE(max_abs(matrix_log2(hermitian_eig(diag({1, 1})))), 1e-15);
    EXPECT_LE(max_abs(matrix_log2(hermitian_eig(diag({0.5, 0.5}))) - diag({-1, -1})), 1e-15);
    EXPECT_LE(max_abs(matrix_log2(hermitian_eig(diag({0.5, 0.25, 0.25, 0})), 1e-12) - diag({-1, -2, -2, 0})), 1e-14);
}

TEST(matrix_log2, zero_convention_and_negative) {
    // Tiny negative eigenvalues inside the threshold map to 0.
    EXPECT_LE(max_abs(matrix_log2(hermitian_eig(diag({1.0, -5e-13})))), 1e-15);
    try {
        matrix_log2(hermitian_eig(diag({1.0, -1e-6})));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NegativeEigenvalue);
    }
}

TEST(kron, examples) {
    EXPECT_EQ(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)), ComplexMatrix::Identity(4, 4));
    EXPECT_EQ(kron(diag({1, 0}), diag({0, 1})), diag({0, 1, 0, 0}));

    const auto g = ghz(3);
    const auto m1 = partial_trace(g, {1}).matrix();
    const auto m2 = partial_trace(g, {2}).matrix();
    const auto m3 = partial_trace(g, {3}).matrix();
    EXPECT_LE(max_abs(kron(kron(m1, m2), m3) - ComplexMatrix::Identity(8, 8) / 8.0), 1e-15);
}

TEST(trace, examples_and_product_rule) {
    EXPECT_EQ(trace(ComplexMatrix::Identity(4, 4)), Complex(4.0));
    EXPECT_NEAR(trace(diag({0.3, 0.7})).real(), 1.0, 1e-15);
    EXPECT_NEAR(trace(random_mixed(SystemShape{2, 3}, 6, 5).matrix()).real(), 1.0, 1e-12);
    EXPECT_THROW(trace(ComplexMatrix::Zero(2, 3)), Error);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const ComplexMatrix a = random_hermitian(2 + i % 3, rng) + ComplexMatrix::Identity(2 + i % 3, 2 + i % 3) * Complex(0, 1);
        const ComplexMatrix b = random_hermitian(3, rng);
        EXPECT_LE(std::abs(trace(kron(a, b)) - trace(a) * trace(b)), 1e-12 * (1 + std::abs(trace(a) * trace(b))));
    }
}

TEST(frobenius_distance, examples) {
    const ComplexMatrix m = diag({0.1, 0.9});
    EXPECT_EQ(frobenius_distance(m, m), 0.0);
    EXPECT_NEAR(frobenius_distance(ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2)), std::sqrt(2.0), 1e-15);
    try {
        frobenius_distance(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

// log2(chi x xi) = log2(chi) x I + I x log2(xi) for full-rank states.
TEST(operator_identities, log_of_tensor_product_splits) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Eigen::Index da = 2 + static_cast<Eigen::Index>(seed % 2);
        const Eigen::Index db = 2 + static_cast<Eigen::Index>((seed / 2) % 2);
        const ComplexMatrix chi = random_mixed(SystemShape{static_cast<int>(da)}, static_cast<int>(da), seed).matrix();
        const ComplexMatrix xi = random_mixed(SystemShape{static_cast<int>(db)}, static_cast<int>(db), seed + 100).matrix();
        const ComplexMatrix lhs = matrix_log2(hermitian_eig(kron(chi, xi)));
        const ComplexMatrix rhs = kron(matrix_log2(hermitian_eig(chi)), ComplexMatrix::Identity(db, db)) +
                                  kron(ComplexMatrix::Identity(da, da), matrix_log2(hermitian_eig(xi)));
        EXPECT_LE(frobenius_distance(lhs, rhs), 1e-9) << "seed " << seed;
    }
}

// f(I x xi) = I x f(xi), including rank-deficient xi under the 0 log 0 convention.
TEST(operator_identities, function_of_identity_tensor) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int rank = 1 + static_cast<int>(seed % 3);
        const ComplexMatrix xi = random_mixed(SystemShape{3}, rank, seed).matrix();
        const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
        const ComplexMatrix lhs = matrix_log2(hermitian_eig(kron(id, xi)));
        const ComplexMatrix rhs = kron(id, matrix_log2(hermitian_eig(xi)));
        EXPECT_LE(frobenius_distance(lhs, rhs), 1e-9) << "seed " << seed << " rank " << rank;
    }
}
