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

#include "qcorr/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

void require_three(int parties, const char *what) {
    if (parties != 3) {
        throw Error(ErrorKind::WrongArity, std::string(what) + " applies to 3-party states, got " + std::to_string(parties));
    }
}

struct Pivot {
    double s, s1, s2;     // single-party entropies
    double ss1, ss2, s12; // pair entropies
    double total;
};

Pivot pivot_entropies(const EntropyTable &t, PartyTriple perm) {
    perm.validate();
    return Pivot{t.single(perm.s),
                 t.single(perm.s1),
                 t.single(perm.s2),
                 t.entropy(SubsystemSet{perm.s, perm.s1}),
                 t.entropy(SubsystemSet{perm.s, perm.s2}),
                 t.entropy(SubsystemSet{perm.s1, perm.s2}),
                 t.total()};
}

double ssa_slack(const Pivot &e) { return e.ss1 + e.ss2 - e.s - e.total; }

CheckResult with_perm(CheckResult r, PartyTriple perm) {
    r.permutation = perm;
    return r;
}

} // namespace

std::string_view to_string(CheckId id) {
    switch (id) {
    case CheckId::Ssa: return "ssa";
    case CheckId::Essa: return "essa";
    case CheckId::MonogamyStrong: return "monogamy_strong";
    case CheckId::MonogamyWeak: return "monogamy_weak";
    case CheckId::LowerBound: return "lower_bound";
    case CheckId::ClosestProduct: return "closest_product";
    case CheckId::PureIdentity: return "pure_identity";
    case CheckId::SchmidtSymmetry: return "schmidt_symmetry";
    }
    return "unknown";
}

bool is_equality_check(CheckId id) {
    return id == CheckId::ClosestProduct || id == CheckId::PureIdentity || id == CheckId::SchmidtSymmetry;
}

void PartyTriple::validate() const {
    std::array<int, 3> v{s, s1, s2};
    std::sort(v.begin(), v.end());
    if (v != std::array<int, 3>{1, 2, 3}) {
        throw Error(ErrorKind::BadPermutation, "(" + std::to_string(s) + "," + std::to_string(s1) + "," +
                                                   std::to_string(s2) + ") is not a permutation of (1,2,3)");
    }
}

std::string PartyTriple::to_string() const { return std::to_string(s) + std::to_string(s1) + std::to_string(s2); }

CheckResult CheckResult::make(CheckId id, double margin, double tolerance) {
    CheckResult r;
    r.id = id;
    r.margin = margin;
    r.tolerance = tolerance;
    r.satisfied = margin >= -tolerance;
    return r;
}

CheckResult CheckResult::make_errored(CheckId id, double tolerance) {
    CheckResult r = make(id, std::numeric_limits<double>::quiet_NaN(), tolerance);
    r.errored = true;
    return r;
}

// ---------------------------------------------------------------------------
// Three-party checks

CheckResult check_ssa(const EntropyTable &t, PartyTriple perm, double tolerance) {
    require_three(t.parties(), "SSA");
    return with_perm(CheckResult::make(CheckId::Ssa, ssa_slack(pivot_entropies(t, perm)), tolerance), perm);
}

CheckResult check_essa(const EntropyTable &t, PartyTriple perm, double tolerance) {
    require_three(t.parties(), "ESSA");
    const Pivot e = pivot_entropies(t, perm);
    const double correction = 2.0 * std::max({e.s1 - e.s12, e.s2 - e.s12, 0.0});
    return with_perm(CheckResult::make(CheckId::Essa, ssa_slack(e) - correction, tolerance), perm);
}

CheckResult check_monogamy_strong(const EntropyTable &t, PartyTriple perm, double tolerance) {
    require_three(t.parties(), "strong monogamy");
    perm.validate();
    const double i_all = t.retc();
    const double i_ss1 = t.mutual_information(SubsystemSet{perm.s}, SubsystemSet{perm.s1});
    const double i_ss2 = t.mutual_information(SubsystemSet{perm.s}, SubsystemSet{perm.s2});
    const double i_12 = t.mutual_information(SubsystemSet{perm.s1}, SubsystemSet{perm.s2});
    const double correction = 2.0 * std::max({i_12 - t.single(perm.s1), i_12 - t.single(perm.s2), 0.0});
    return with_perm(CheckResult::make(CheckId::MonogamyStrong, i_all - i_ss1 - i_ss2 - correction, tolerance), perm);
}

CheckResult check_monogamy_weak(const EntropyTable &t, PartyTriple perm, double tolerance) {
    require_three(t.parties(), "weak monogamy");
    perm.validate();
    const double margin = t.retc() - t.mutual_information(SubsystemSet{perm.s}, SubsystemSet{perm.s1}) -
                          t.mutual_information(SubsystemSet{perm.s}, SubsystemSet{perm.s2});
    return with_perm(CheckResult::make(CheckId::MonogamyWeak, margin, tolerance), perm);
}

CheckResult check_lower_bound(const EntropyTable &t, double tolerance) {
    require_three(t.parties(), "lower bound");
    return CheckResult::make(CheckId::LowerBound, t.retc() - (2.0 / 3.0) * t.bipartite_mi_sum(), tolerance);
}

CheckResult check_ssa(const DensityOperator &rho, PartyTriple perm, double tolerance) {
    require_three(rho.parties(), "SSA");
    return check_ssa(EntropyTable(rho), perm, tolerance);
}

CheckResult check_essa(const DensityOperator &rho, PartyTriple perm, double tolerance) {
    require_three(rho.parties(), "ESSA");
    return check_essa(EntropyTable(rho), perm, tolerance);
}

CheckResult check_monogamy_strong(const DensityOperator &rho, PartyTriple perm, double tolerance) {
    require_three(rho.parties(), "strong monogamy");
    return check_monogamy_strong(EntropyTable(rho), perm, tolerance);
}

CheckResult check_monogamy_weak(const DensityOperator &rho, PartyTriple perm, double tolerance) {
    require_three(rho.parties(), "weak monogamy");
    return check_monogamy_weak(EntropyTable(rho), perm, tolerance);
}

CheckResult check_lower_bound(const DensityOperator &rho, double tolerance) {
    require_three(rho.parties(), "lower bound");
    return check_lower_bound(EntropyTable(rho), tolerance);
}

// ---------------------------------------------------------------------------
// Any arity

CheckResult check_pure_identity(const EntropyTable &t, int k, double tolerance) {
    const double rhs = t.pure_distribution_rhs(k); // throws NotPure / BadK
    const double total = t.retc();
    CheckResult r = CheckResult::make(CheckId::PureIdentity, -std::abs(total - rhs), tolerance);
    r.k = k;
    if (k == 1 && t.parties() >= 4) r.auxiliary = t.marginal_mi_sum(1) - total;
    return r;
}

CheckResult check_pure_identity(const DensityOperator &rho, int k, double tolerance) {
    if (k < 1 || k > rho.parties() - 2) {
        throw Error(ErrorKind::BadK, "pure identity: k = " + std::to_string(k) + " outside 1.." +
                                         std::to_string(rho.parties() - 2));
    }
    return check_pure_identity(EntropyTable(rho), k, tolerance);
}

CheckResult check_closest_product(const DensityOperator &rho, const EntropyTable &t, double tolerance) {
    const double divergence = relative_entropy(rho, closest_product_state(rho));
    if (!std::isfinite(divergence)) return CheckResult::make_errored(CheckId::ClosestProduct, tolerance);
    return CheckResult::make(CheckId::ClosestProduct, -std::abs(t.retc() - divergence), tolerance);
}

CheckResult check_schmidt_symmetry(const EntropyTable &t, double tolerance) {
    if (t.total() > kPurityTolerance) {
        throw Error(ErrorKind::NotPure, "Schmidt symmetry needs a pure state, S = " + std::to_string(t.total()),
                    t.total());
    }
    const int n = t.parties();
    double worst = 0.0;
    for (int size = 1; size < n; ++size) {
        for (const auto &x : subsets_of_size(n, size)) {
            worst = std::max(worst, std::abs(t.entropy(x) - t.entropy(x.complement(n))));
        }
    }
    return CheckResult::make(CheckId::SchmidtSymmetry, -worst, tolerance);
}

// ---------------------------------------------------------------------------
// Reports

bool AuditReport::all_satisfied() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.satisfied && !r.errored; });
}

AuditReport audit_state(const DensityOperator &rho, std::string descriptor, const Tolerances &tol) {
    const int n = rho.parties();
    if (n < 2) {
        throw Error(ErrorKind::SinglePartySystem, "audit needs at least 2 parties");
    }
    const EntropyTable table(rho);
    AuditReport report{std::move(descriptor), correlation_profile(table, rho.shape()), {}, {}};
    auto &out = report.results;

    if (n == 3) {
        for (const auto &perm : kSsaPermutations) out.push_back(check_ssa(table, perm, tol.inequality));
        for (const auto &perm : kSsaPermutations) out.push_back(check_essa(table, perm, tol.inequality));
        for (const auto &perm : kSsaPermutations) out.push_back(check_monogamy_strong(table, perm, tol.inequality));
        for (const auto &perm : kMonogamyPermutations) out.push_back(check_monogamy_weak(table, perm, tol.inequality));
        out.push_back(check_lower_bound(table, tol.inequality));
    } else {
        report.notices.push_back("three-party checks skipped (n = " + std::to_string(n) + ")");
    }

    out.push_back(check_closest_product(rho, table, tol.equality));

    if (table.total() <= kPurityTolerance) {
        out.push_back(check_schmidt_symmetry(table, tol.equality));
        for (int k = 1; k <= n - 2; ++k) out.push_back(check_pure_identity(table, k, tol.equality));
        if (n < 3) report.notices.push_back("pure-state distribution identity needs n >= 3");
    } else {
        std::ostringstream os;
        os << "pure-state checks skipped (S = " << table.total() << ")";
        report.notices.push_back(os.str());
    }
    return report;
}

// ---------------------------------------------------------------------------
// Ensembles

std::string_view to_string(Family f) {
    switch (f) {
    case Family::Ginibre: return "ginibre";
    case Family::HaarPure: return "haar";
    case Family::Chi: return "chi";
    }
    return "unknown";
}

bool EnsembleSummary::all_satisfied() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckSummary &c) { return c.all_satisfied(); });
}

const CheckSummary *EnsembleSummary::find(CheckId id) const {
    for (const auto &c : checks) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

std::uint64_t sample_seed(const EnsembleConfig &config, int index) {
    return config.seed + static_cast<std::uint64_t>(index);
}

DensityOperator sample_state(const EnsembleConfig &config, int index) {
    Rng rng(sample_seed(config, index));
    switch (config.family) {
    case Family::Ginibre: {
        const int rank = config.rank == 0 ? static_cast<int>(config.shape.total_dim()) : config.rank;
        return random_mixed(config.shape, rank, rng);
    }
    case Family::HaarPure: return random_pure(config.shape, rng);
    case Family::Chi: {
        const auto &dims = config.shape.dims();
        const int outcomes = *std::min_element(dims.begin(), dims.end());
        const auto p = random_distribution(outcomes, rng);
        return classical_chi(p, config.shape);
    }
    }
    throw Error(ErrorKind::BadParameter, "unknown ensemble family");
}

EnsembleSummary run_ensemble(const EnsembleConfig &config) {
    if (config.samples < 1) {
        throw Error(ErrorKind::UsageError, "ensemble needs at least one sample");
    }
    if (config.shape.parties() < 2) {
        throw Error(ErrorKind::SinglePartySystem, "ensemble needs at least 2 parties");
    }
    if (config.rank < 0 || config.rank > config.shape.total_dim()) {
        throw Error(ErrorKind::BadRank, "rank must lie in 0.." + std::to_string(config.shape.total_dim()));
    }

    // Every sample writes only its own slot; the fold below runs in index
    // order so the summary is independent of the thread count.
    std::vector<std::optional<AuditReport>> reports(static_cast<std::size_t>(config.samples));
    auto evaluate = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            reports[static_cast<std::size_t>(i)] =
                audit_state(sample_state(config, i), "sample " + std::to_string(i), config.tolerances);
        }
    };
    const unsigned threads = std::clamp(config.threads, 1u, static_cast<unsigned>(config.samples));
    if (threads == 1) {
        evaluate(0, config.samples);
    } else {
        std::vector<std::jthread> workers;
        const int chunk = (config.samples + static_cast<int>(threads) - 1) / static_cast<int>(threads);
        for (int begin = 0; begin < config.samples; begin += chunk) {
            workers.emplace_back(evaluate, begin, std::min(begin + chunk, config.samples));
        }
    }

    EnsembleSummary summary{config, {}, {}};
    std::map<CheckId, CheckSummary> by_id;
    for (int i = 0; i < config.samples; ++i) {
        for (const auto &r : reports[static_cast<std::size_t>(i)]->results) {
            auto [it, inserted] = by_id.try_emplace(r.id);
            CheckSummary &c = it->second;
            if (inserted) {
                c.id = r.id;
                c.tolerance = r.tolerance;
                c.min_margin = std::numeric_limits<double>::infinity();
                c.max_margin = -std::numeric_limits<double>::infinity();
            }
            ++c.evaluations;
            if (r.errored) {
                ++c.errored;
                continue;
            }
            if (r.margin < c.min_margin) {
                c.min_margin = r.margin;
                c.argmin_sample = i;
                c.argmin_seed = sample_seed(config, i);
            }
            c.max_margin = std::max(c.max_margin, r.margin);
            if (r.saturated()) ++c.near_saturations;
        }
    }
    if (config.shape.parties() != 3) {
        summary.notices.push_back("three-party checks skipped (n = " + std::to_string(config.shape.parties()) + ")");
    }
    if (!by_id.contains(CheckId::SchmidtSymmetry)) {
        summary.notices.push_back("pure-state checks skipped (mixed ensemble)");
    }
    for (auto &[id, c] : by_id) summary.checks.push_back(c);
    return summary;
}

} // namespace qcorr
