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

#include "gtest/gtest.h"

#include "qcorr/error.hpp"
#include "support/oracles.hpp"

using namespace qcorr;

namespace {

template <typename F>
ErrorKind kind_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no qcorr::Error thrown";
    return ErrorKind::UsageError;
}

DensityOperator ket(int index) {
    ComplexVector v = ComplexVector::Zero(2);
    v(index) = 1.0;
    return from_pure(SystemShape{2}, v);
}

DensityOperator product_bell() { return tensor({maximally_mixed(2), ghz(2)}); }

DensityOperator chi_uniform() {
    const double p[] = {0.5, 0.5};
    return classical_chi(p, SystemShape{2, 2, 2});
}

} // namespace

TEST(von_neumann_entropy, examples) {
    EXPECT_NEAR(von_neumann_entropy(maximally_mixed(2)), 1.0, 1e-15);
    EXPECT_EQ(von_neumann_entropy(ket(0)), 0.0);
    EXPECT_NEAR(von_neumann_entropy(random_pure(SystemShape{2, 3}, 3)), 0.0, 1e-9);
    EXPECT_NEAR(von_neumann_entropy(partial_trace(w3(), {2})), std::log2(3.0) - 2.0 / 3.0, 1e-12);
}

TEST(von_neumann_entropy, bounds_and_logm_agreement) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const SystemShape shape{2, 3};
        const auto rho = random_mixed(shape, 1 + static_cast<int>(seed % 6), seed);
        const double s = von_neumann_entropy(rho);
        EXPECT_GE(s, 0.0);
        EXPECT_LE(s, std::log2(6.0));
        EXPECT_NEAR(s, oracle::entropy_via_logm(rho.matrix()), 1e-10);
    }
    EXPECT_NEAR(von_neumann_entropy(maximally_mixed(5)), std::log2(5.0), 1e-12);
}

TEST(relative_entropy, examples) {
    const auto rho = random_mixed(SystemShape{2, 2}, 3, 1);
    EXPECT_NEAR(relative_entropy(rho, rho), 0.0, 1e-10);

    const auto g = ghz(3);
    EXPECT_NEAR(relative_entropy(g, closest_product_state(g)), 3.0, 1e-12);

    EXPECT_TRUE(std::isinf(relative_entropy(ket(0), ket(1))));
    EXPECT_EQ(kind_of([] { relative_entropy(ghz(2), ghz(3)); }), ErrorKind::ShapeMismatch);
}

TEST(relative_entropy, matches_operator_log_route) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const SystemShape shape{2, 2};
        const auto rho = random_mixed(shape, 1 + static_cast<int>(seed % 4), seed);
        const auto sigma = random_mixed(shape, 4, seed + 1000);
        EXPECT_NEAR(relative_entropy(rho, sigma), oracle::relative_entropy_via_logm(rho.matrix(), sigma.matrix()), 1e-9);
    }
}

TEST(relative_entropy, support_condition) {
    // rho inside sigma's support: finite, even though sigma is rank deficient.
    const auto sigma = ghz(3);
    const auto product = closest_product_state(sigma);
    EXPECT_TRUE(std::isfinite(relative_entropy(sigma, product)));
    EXPECT_TRUE(std::isinf(relative_entropy(product, sigma)));
}

// Klein: S(rho||sigma) >= 0, and near-zero only for nearby operators.
TEST(relative_entropy, klein_inequality) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const SystemShape shape{2, 2};
        const auto rho = random_mixed(shape, 4, seed);
        Rng rng(seed + 7);
        // Mix toward rho so some pairs are very close.
        const double t = std::pow(10.0, -static_cast<double>(seed % 6));
        const auto other = random_mixed(shape, 4, rng);
        const auto sigma = DensityOperator::create(shape, (1.0 - t) * rho.matrix() + t * other.matrix());
        const double d = relative_entropy(rho, sigma);
        EXPECT_GE(d, 0.0);
        if (d <= 1e-8) EXPECT_LE(frobenius_distance(rho.matrix(), sigma.matrix()), 1e-4);
    }
}

TEST(mutual_information, examples) {
    EXPECT_NEAR(mutual_information(partial_trace(ghz(3), {1, 2}), {1}), 1.0, 1e-12);
    EXPECT_NEAR(mutual_information(ghz(2), {2}), 2.0, 1e-12);
    // Bipartite cuts of a GHZ4 three-qubit marginal: S(1) + S(23) - S(123) = 1.
    const auto r123 = partial_trace(ghz(4), {1, 2, 3});
    EXPECT_NEAR(mutual_information(r123, {1}), 1.0, 1e-12);
    EXPECT_NEAR(retc(r123), 2.0, 1e-12);
    const auto prod = tensor({random_mixed(SystemShape{2}, 2, 1), random_mixed(SystemShape{3}, 3, 2)});
    EXPECT_NEAR(mutual_information(prod, {1}), 0.0, 1e-10);
    EXPECT_EQ(kind_of([] { mutual_information(ghz(3), {1, 2, 3}); }), ErrorKind::BadCut);
    EXPECT_EQ(kind_of([] { mutual_information(ghz(3), {4}); }), ErrorKind::BadCut);
}

TEST(mutual_information, nonnegative_on_random_states) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto rho = random_mixed(SystemShape{2, 2, 2}, 1 + static_cast<int>(seed % 8), seed);
        for (int size = 1; size < 3; ++size) {
            for (const auto &cut : subsets_of_size(3, size)) EXPECT_GE(mutual_information(rho, cut), 0.0);
        }
    }
}

TEST(retc, examples) {
    EXPECT_NEAR(retc(ghz(3)), 3.0, 1e-12);
    EXPECT_NEAR(retc(ghz(4)), 4.0, 1e-12);
    EXPECT_NEAR(retc(chi_uniform()), 2.0, 1e-12);
    EXPECT_EQ(kind_of([] { retc(maximally_mixed(2)); }), ErrorKind::SinglePartySystem);
}

TEST(retc, equals_divergence_from_marginal_product) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto rho = random_mixed(SystemShape{2, 2, 2}, 1 + static_cast<int>(seed % 8), seed);
        const double by_entropy = retc(rho);
        const double by_divergence = relative_entropy(rho, closest_product_state(rho));
        ASSERT_NEAR(by_entropy, by_divergence, 1e-8) << "seed " << seed;
        const auto profile = correlation_profile(rho);
        double sum = 0.0;
        for (double s : profile.marginal_entropies) sum += s;
        ASSERT_NEAR(profile.retc, sum - profile.total_entropy, 1e-9);
    }
}

TEST(marginal_sums, examples) {
    EXPECT_NEAR(marginal_mi_sum(ghz(4), 1), 8.0, 1e-12);
    EXPECT_NEAR(marginal_mi_sum(ghz(3), 1), 3.0, 1e-12);
    const auto prod4 = tensor({random_mixed(SystemShape{2}, 2, 1), random_mixed(SystemShape{2}, 2, 2),
                               random_mixed(SystemShape{2}, 2, 3), random_mixed(SystemShape{2}, 2, 4)});
    EXPECT_NEAR(marginal_mi_sum(prod4, 1), 0.0, 1e-10);

    EXPECT_NEAR(marginal_entropy_sum(ghz(3), 1), 3.0, 1e-12);
    EXPECT_NEAR(marginal_entropy_sum(ghz(4), 3), 4.0, 1e-12);
    ComplexVector zero = ComplexVector::Zero(8);
    zero(0) = 1.0;
    const auto pure_product = from_pure(SystemShape{2, 2, 2}, zero);
    for (int k = 1; k <= 2; ++k) EXPECT_EQ(marginal_entropy_sum(pure_product, k), 0.0);

    EXPECT_EQ(kind_of([] { marginal_mi_sum(ghz(3), 2); }), ErrorKind::BadK);
    EXPECT_EQ(kind_of([] { marginal_mi_sum(ghz(4), 0); }), ErrorKind::BadK);
    EXPECT_EQ(kind_of([] { marginal_entropy_sum(ghz(3), 3); }), ErrorKind::BadK);
}

TEST(pure_distribution_rhs, examples) {
    EXPECT_NEAR(pure_distribution_rhs(ghz(3), 1), 3.0, 1e-12);
    EXPECT_NEAR(pure_distribution_rhs(ghz(4), 1), (8.0 + 4.0) / 3.0, 1e-12);
    // k = 1 special case: I = I_{n-1} / (n - 2).
    EXPECT_NEAR(marginal_mi_sum(ghz(4), 1) / 2.0, retc(ghz(4)), 1e-12);
    const auto psi = random_pure(SystemShape{2, 2, 2, 2}, 5);
    EXPECT_NEAR(pure_distribution_rhs(psi, 2), retc(psi), 1e-7);
    EXPECT_EQ(kind_of([] { pure_distribution_rhs(wghz_mixture(0.5), 1); }), ErrorKind::NotPure);
    EXPECT_EQ(kind_of([] { pure_distribution_rhs(ghz(4), 3); }), ErrorKind::BadK);
}

TEST(pure_distribution_rhs, holds_for_random_pure_states) {
    const std::vector<SystemShape> shapes{SystemShape{2, 2, 2}, SystemShape{2, 2, 2, 2}, SystemShape{2, 3, 2}};
    for (const auto &shape : shapes) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto psi = random_pure(shape, seed);
            const EntropyTable table(psi);
            for (int k = 1; k <= shape.parties() - 2; ++k) {
                ASSERT_NEAR(table.pure_distribution_rhs(k), table.retc(), 1e-7) << shape.to_string() << " k=" << k;
            }
        }
    }
}

TEST(pure_distribution_rhs, three_party_equality_and_four_party_overcount) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const EntropyTable three(random_pure(SystemShape{2, 2, 2}, seed));
        EXPECT_NEAR(three.retc(), three.marginal_mi_sum(1), 1e-7);

        const EntropyTable four(random_pure(SystemShape{2, 2, 2, 2}, seed));
        const double excess = four.marginal_mi_sum(1) - four.retc();
        EXPECT_GE(excess, -1e-8);
        EXPECT_GT(excess, 1e-3) << "seed " << seed;
        EXPECT_NEAR(four.marginal_mi_sum(1), 2.0 * four.retc(), 1e-7);
    }
}

TEST(residual_correlation, examples) {
    EXPECT_NEAR(residual_correlation(chi_uniform()), 0.0, 1e-12);
    EXPECT_NEAR(residual_correlation(product_bell()), 2.0 / 3.0, 1e-12);
    const auto prod = tensor({random_mixed(SystemShape{2}, 2, 1), random_mixed(SystemShape{2}, 2, 2),
                              random_mixed(SystemShape{2}, 2, 3)});
    EXPECT_NEAR(residual_correlation(prod), 0.0, 1e-10);
    EXPECT_EQ(kind_of([] { residual_correlation(ghz(4)); }), ErrorKind::WrongArity);
}

TEST(residual_correlation, product_with_pair_is_a_third_of_pair_correlation) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto pair = random_mixed(SystemShape{2, 2}, 1 + static_cast<int>(seed % 4), seed);
        const auto rho = tensor({random_mixed(SystemShape{2}, 2, seed + 99), pair});
        const EntropyTable t(rho);
        EXPECT_NEAR(t.retc(), retc(pair), 1e-9);
        EXPECT_NEAR(t.bipartite_mi_sum(), retc(pair), 1e-9);
        EXPECT_NEAR(t.residual(), retc(pair) / 3.0, 1e-9);
    }
}

TEST(closest_product_state, examples) {
    EXPECT_LE(max_abs(closest_product_state(ghz(3)).matrix() - ComplexMatrix::Identity(8, 8) / 8.0), 1e-15);
    const auto prod = tensor({random_mixed(SystemShape{2}, 2, 1), random_mixed(SystemShape{3}, 2, 2)});
    EXPECT_LE(max_abs(closest_product_state(prod).matrix() - prod.matrix()), 1e-12);
    EXPECT_EQ(kind_of([] { closest_product_state(maximally_mixed(3)); }), ErrorKind::SinglePartySystem);
}

TEST(decomposition_identity_gap, examples) {
    const auto rho = random_mixed(SystemShape{2, 2, 2}, 8, 3);
    EXPECT_LE(decomposition_identity_gap(rho, single_party_marginals(rho)), 1e-10);

    const std::vector<DensityOperator> mixed(3, maximally_mixed(2));
    EXPECT_LE(decomposition_identity_gap(ghz(3), mixed), 1e-12);
    EXPECT_NEAR(relative_entropy(ghz(3), tensor(mixed)), 3.0, 1e-12);

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto r = random_mixed(SystemShape{2, 2, 2}, 1 + static_cast<int>(seed % 8), seed);
        std::vector<DensityOperator> sigmas;
        for (int s = 0; s < 3; ++s) sigmas.push_back(random_mixed(SystemShape{2}, 2, seed * 10 + s + 1));
        EXPECT_LE(decomposition_identity_gap(r, sigmas), 1e-8);
    }

    const std::vector<DensityOperator> two(2, maximally_mixed(2));
    EXPECT_EQ(kind_of([&] { decomposition_identity_gap(ghz(3), two); }), ErrorKind::ShapeMismatch);
    const std::vector<DensityOperator> pure{ket(0), ket(0), ket(0)};
    EXPECT_EQ(kind_of([&] { decomposition_identity_gap(ghz(3), pure); }), ErrorKind::InfiniteTerm);
}

TEST(correlation_profile, ghz4_fields) {
    const auto p = correlation_profile(ghz(4));
    EXPECT_NEAR(p.retc, 4.0, 1e-12);
    EXPECT_NEAR(p.marginal_mi_sums.at(1), 8.0, 1e-12);
    EXPECT_NEAR(p.marginal_mi_sums.at(2), 6.0, 1e-12);
    EXPECT_NEAR(p.marginal_entropy_sums.at(1), 4.0, 1e-12);
    EXPECT_NEAR(p.marginal_entropy_sums.at(3), 4.0, 1e-12);
    EXPECT_FALSE(p.residual.has_value());
    EXPECT_NEAR(*correlation_profile(ghz(3)).residual, 1.0, 1e-12);
}
