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

#ifndef QCORR_AUDIT_HPP
#define QCORR_AUDIT_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcorr/correlations.hpp"

namespace qcorr {

enum class CheckId {
    Ssa,             // strong subadditivity
    Essa,            // extended strong subadditivity
    MonogamyStrong,  // monogamy with the 2 max{...} correction
    MonogamyWeak,    // I(123) >= I(ss') + I(ss'')
    LowerBound,      // I(123) >= (2/3) * sum of pairwise MI
    ClosestProduct,  // retc == S(rho || product of marginals)
    PureIdentity,    // retc == k!(I_{n-k} + S_k) / prod (n-i) for pure states
    SchmidtSymmetry, // S(rho_x) == S(rho_xbar) for pure states
};

std::string_view to_string(CheckId id);

/// Whether the check is an equality (uses Tolerances::equality) or an
/// inequality (uses Tolerances::inequality).
bool is_equality_check(CheckId id);

/// Ordered labels (s, s', s'') of a three-party permutation; s is the pivot.
struct PartyTriple {
    int s = 1;
    int s1 = 2;
    int s2 = 3;

    /// Throws BadPermutation unless this is a permutation of (1, 2, 3).
    void validate() const;
    std::string to_string() const;

    friend bool operator==(const PartyTriple &, const PartyTriple &) = default;
};

/// Orders used for SSA, ESSA and the strong monogamy relation.
inline constexpr std::array<PartyTriple, 3> kSsaPermutations{{{1, 2, 3}, {2, 3, 1}, {3, 2, 1}}};
/// Orders combined into the 2/3 lower bound.
inline constexpr std::array<PartyTriple, 3> kMonogamyPermutations{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};

struct Tolerances {
    double inequality = 1e-8;
    double equality = 1e-7;

    double for_check(CheckId id) const { return is_equality_check(id) ? equality : inequality; }
};

/// |margin| at or below this marks an inequality as saturated.
inline constexpr double kSaturationThreshold = 1e-6;

/// Signed slack of one relation on one state. `margin >= 0` means the
/// relation holds exactly; equality checks report -|lhs - rhs|.
struct CheckResult {
    CheckId id = CheckId::Ssa;
    double margin = 0.0;
    double tolerance = 0.0;
    bool satisfied = false;
    /// The check could not be evaluated (e.g. an infinite divergence).
    bool errored = false;
    std::optional<PartyTriple> permutation;
    std::optional<int> k;
    /// Extra signed value some checks report; for the pure identity at
    /// n >= 4, k = 1 this is I_{n-1} - retc.
    std::optional<double> auxiliary;

    static CheckResult make(CheckId id, double margin, double tolerance);
    static CheckResult make_errored(CheckId id, double tolerance);

    bool saturated() const { return !errored && std::abs(margin) <= kSaturationThreshold; }
};

// Three-party checks. All throw WrongArity unless n = 3.

/// S(ss') + S(ss'') - S(s) - S(123).
CheckResult check_ssa(const EntropyTable &t, PartyTriple perm, double tolerance = 1e-8);
CheckResult check_ssa(const DensityOperator &rho, PartyTriple perm, double tolerance = 1e-8);

/// SSA slack minus 2 max{S(s') - S(s's''), S(s'') - S(s's''), 0}.
CheckResult check_essa(const EntropyTable &t, PartyTriple perm, double tolerance = 1e-8);
CheckResult check_essa(const DensityOperator &rho, PartyTriple perm, double tolerance = 1e-8);

/// I(123) - I(ss') - I(ss'') - 2 max{I(s's'') - S(s'), I(s's'') - S(s''), 0}.
CheckResult check_monogamy_strong(const EntropyTable &t, PartyTriple perm, double tolerance = 1e-8);
CheckResult check_monogamy_strong(const DensityOperator &rho, PartyTriple perm, double tolerance = 1e-8);

/// I(123) - I(ss') - I(ss'').
CheckResult check_monogamy_weak(const EntropyTable &t, PartyTriple perm, double tolerance = 1e-8);
CheckResult check_monogamy_weak(const DensityOperator &rho, PartyTriple perm, double tolerance = 1e-8);

/// I(123) - (2/3) * (I(12) + I(13) + I(23)); the unclamped residual correlation.
CheckResult check_lower_bound(const EntropyTable &t, double tolerance = 1e-8);
CheckResult check_lower_bound(const DensityOperator &rho, double tolerance = 1e-8);

// Checks for any arity.

/// -|retc - pure_distribution_rhs(k)|. Throws NotPure or BadK.
CheckResult check_pure_identity(const EntropyTable &t, int k, double tolerance = 1e-7);
CheckResult check_pure_identity(const DensityOperator &rho, int k, double tolerance = 1e-7);

/// -|retc - S(rho || product of marginals)|; errored if the divergence is infinite.
CheckResult check_closest_product(const DensityOperator &rho, const EntropyTable &t, double tolerance = 1e-7);

/// -max over bipartitions |S(rho_x) - S(rho_xbar)|. Throws NotPure.
CheckResult check_schmidt_symmetry(const EntropyTable &t, double tolerance = 1e-7);

struct AuditReport {
    std::string state_descriptor;
    CorrelationProfile profile;
    std::vector<CheckResult> results;
    /// Human-readable notes about skipped check groups.
    std::vector<std::string> notices;

    bool all_satisfied() const;
};

/// Runs every check applicable to the state's arity and purity.
AuditReport audit_state(const DensityOperator &rho, std::string descriptor, const Tolerances &tolerances = {});

enum class Family {
    Ginibre,  // random_mixed with the configured rank
    HaarPure, // random_pure
    Chi,      // classical_chi with a random distribution
};

std::string_view to_string(Family f);

struct EnsembleConfig {
    Family family = Family::Ginibre;
    SystemShape shape{2, 2, 2};
    /// Ginibre rank; 0 selects full rank.
    int rank = 0;
    int samples = 1000;
    std::uint64_t seed = 42;
    Tolerances tolerances;
    /// Worker threads; results do not depend on this.
    unsigned threads = 1;
};

struct CheckSummary {
    CheckId id = CheckId::Ssa;
    double tolerance = 0.0;
    double min_margin = 0.0;
    double max_margin = 0.0;
    int argmin_sample = -1;
    std::uint64_t argmin_seed = 0;
    int evaluations = 0;
    int near_saturations = 0;
    int errored = 0;

    bool all_satisfied() const { return errored == 0 && min_margin >= -tolerance; }
};

struct EnsembleSummary {
    EnsembleConfig config;
    std::vector<CheckSummary> checks;
    std::vector<std::string> notices;

    bool all_satisfied() const;
    const CheckSummary *find(CheckId id) const;
};

/// Seed used for sample `index`: config.seed + index.
std::uint64_t sample_seed(const EnsembleConfig &config, int index);

/// The state evaluated as sample `index` of the ensemble.
DensityOperator sample_state(const EnsembleConfig &config, int index);

EnsembleSummary run_ensemble(const EnsembleConfig &config);

} // namespace qcorr

#endif // QCORR_AUDIT_HPP
