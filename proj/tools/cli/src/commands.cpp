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

#include "qcorr/cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qcorr/cli/state_file.hpp"

namespace qcorr::cli {

namespace {

std::string short_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value == 0.0 ? 0.0 : value);
    return buf;
}

std::string sci(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", value == 0.0 ? 0.0 : value);
    return buf;
}

std::string short_sci(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0e", value);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::ofstream open_output(const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
    return out;
}

std::string status_of(const CheckResult &r) {
    if (r.errored) return "ERRORED";
    if (!r.satisfied) return "VIOLATED";
    if (!is_equality_check(r.id) && r.saturated()) return "ok (saturated)";
    return "ok";
}

} // namespace

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvariantViolation:
    case ErrorKind::NonFinite:
    case ErrorKind::NonHermitian: return kExitInvalidInput;
    default: return kExitUsage;
    }
}

// ---------------------------------------------------------------------------
// Sweep

std::vector<SweepRow> wghz_sweep(int steps) {
    if (steps < 2) {
        throw Error(ErrorKind::UsageError, "sweep needs at least 2 steps, got " + std::to_string(steps));
    }
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double p = i == steps - 1 ? 1.0 : static_cast<double>(i) / (steps - 1);
        const EntropyTable table(wghz_mixture(p));
        SweepRow row{p, table.retc(), table.bipartite_mi_sum(), 0.0, 0.0};
        row.gap = row.retc - row.i2_sum;
        row.residual = table.residual();
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << "p,retc,i2_sum,gap,residual\n";
    for (const auto &r : rows) {
        out << format_double(r.p) << ',' << format_double(r.retc) << ',' << format_double(r.i2_sum) << ','
            << format_double(r.gap) << ',' << format_double(r.residual) << '\n';
    }
}

// ---------------------------------------------------------------------------
// Rendering

void render_audit(std::ostream &out, const AuditReport &report, Format format) {
    if (format == Format::Csv) {
        out << "check,permutation,k,margin,tolerance,satisfied,saturated,errored,auxiliary\n";
        for (const auto &r : report.results) {
            out << to_string(r.id) << ',' << (r.permutation ? r.permutation->to_string() : "") << ','
                << (r.k ? std::to_string(*r.k) : "") << ',' << (r.errored ? "nan" : format_double(r.margin)) << ','
                << format_double(r.tolerance) << ',' << (r.satisfied ? 1 : 0) << ',' << (r.saturated() ? 1 : 0) << ','
                << (r.errored ? 1 : 0) << ',' << (r.auxiliary ? format_double(*r.auxiliary) : "") << '\n';
        }
        return;
    }

    const auto &p = report.profile;
    out << "state " << report.state_descriptor << "  shape " << p.shape.to_string() << '\n';
    out << "  S(rho) = " << short_number(p.total_entropy) << "  retc = " << short_number(p.retc)
        << "  I2 = " << short_number(p.bipartite_mi_sum);
    if (p.residual) out << "  I_r = " << short_number(*p.residual);
    out << "\n\n";
    out << pad("check", 18) << pad("perm", 6) << pad("k", 4) << pad("margin", 15) << pad("tolerance", 11) << "status\n";
    int failures = 0;
    for (const auto &r : report.results) {
        out << pad(std::string(to_string(r.id)), 18) << pad(r.permutation ? r.permutation->to_string() : "-", 6)
            << pad(r.k ? std::to_string(*r.k) : "-", 4) << pad(r.errored ? "nan" : sci(r.margin), 15)
            << pad(short_sci(r.tolerance), 11) << status_of(r);
        if (r.auxiliary) out << "  (I_{n-1} - retc = " << short_number(*r.auxiliary) << ")";
        out << '\n';
        if (!r.satisfied || r.errored) ++failures;
    }
    for (const auto &note : report.notices) out << "note: " << note << '\n';
    out << "legend: perm is (s,s',s''); ssa/essa/monogamy_strong use 123,231,321 and monogamy_weak uses "
           "123,231,312. Only the pivot s changes a margin.\n";
    if (failures == 0) {
        out << "result: all " << report.results.size() << " checks satisfied\n";
    } else {
        out << "result: " << failures << " of " << report.results.size() << " checks failed\n";
    }
}

void render_profile(std::ostream &out, const CorrelationProfile &p, const std::vector<int> &ks, Format format) {
    std::vector<std::pair<std::string, double>> rows;
    const bool csv = format == Format::Csv;
    rows.emplace_back(csv ? "total_entropy" : "S(rho)", p.total_entropy);
    for (std::size_t s = 0; s < p.marginal_entropies.size(); ++s) {
        rows.emplace_back(csv ? "marginal_entropy_" + std::to_string(s + 1) : "S(rho_" + std::to_string(s + 1) + ")",
                          p.marginal_entropies[s]);
    }
    rows.emplace_back("retc", p.retc);
    rows.emplace_back(csv ? "bipartite_mi_sum" : "pairwise MI sum", p.bipartite_mi_sum);
    const int n = p.shape.parties();
    for (int k : ks) {
        if (auto it = p.marginal_mi_sums.find(k); it != p.marginal_mi_sums.end()) {
            rows.emplace_back(csv ? "marginal_mi_sum_k" + std::to_string(k)
                                  : "I_" + std::to_string(n - k) + " (k=" + std::to_string(k) + ")",
                              it->second);
        }
        if (auto it = p.marginal_entropy_sums.find(k); it != p.marginal_entropy_sums.end()) {
            rows.emplace_back(csv ? "marginal_entropy_sum_k" + std::to_string(k) : "S_" + std::to_string(k),
                              it->second);
        }
    }
    if (p.residual) rows.emplace_back(csv ? "residual" : "I_r", *p.residual);

    if (csv) {
        out << "quantity,value\n";
        for (const auto &[name, value] : rows) out << name << ',' << format_double(value) << '\n';
        return;
    }
    std::size_t width = 0;
    for (const auto &row : rows) width = std::max(width, row.first.size());
    out << "shape " << p.shape.to_string() << '\n';
    for (const auto &[name, value] : rows) out << "  " << pad(name, width + 2) << short_number(value) << '\n';
}

void render_ensemble(std::ostream &out, const EnsembleSummary &s, Format format) {
    const auto &c = s.config;
    if (format == Format::Csv) {
        out << "check,evaluations,min_margin,max_margin,argmin_sample,argmin_seed,near_saturations,errored,tolerance,"
               "satisfied\n";
        for (const auto &k : s.checks) {
            out << to_string(k.id) << ',' << k.evaluations << ',' << format_double(k.min_margin) << ','
                << format_double(k.max_margin) << ',' << k.argmin_sample << ',' << k.argmin_seed << ','
                << k.near_saturations << ',' << k.errored << ',' << format_double(k.tolerance) << ','
                << (k.all_satisfied() ? 1 : 0) << '\n';
        }
        return;
    }
    out << "ensemble " << to_string(c.family) << "  shape " << c.shape.to_string();
    if (c.family == Family::Ginibre) out << "  rank " << (c.rank == 0 ? static_cast<int>(c.shape.total_dim()) : c.rank);
    out << "  samples " << c.samples << "  seed " << c.seed << "\n\n";
    out << pad("check", 18) << pad("evals", 7) << pad("min margin", 15) << pad("argmin", 8) << pad("near-sat", 10)
        << "status\n";
    for (const auto &k : s.checks) {
        out << pad(std::string(to_string(k.id)), 18) << pad(std::to_string(k.evaluations), 7)
            << pad(sci(k.min_margin), 15) << pad(std::to_string(k.argmin_sample), 8)
            << pad(std::to_string(k.near_saturations), 10) << (k.all_satisfied() ? "ok" : "VIOLATED") << '\n';
    }
    for (const auto &note : s.notices) out << "note: " << note << '\n';
    out << (s.all_satisfied() ? "result: all minimum margins within tolerance\n"
                              : "result: some minimum margins below -tolerance\n");
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_audit(const AuditOptions &opts, std::ostream &out) {
    const AuditReport report = audit_state(resolve_state(opts.state), opts.state, opts.tolerances);
    render_audit(out, report, opts.format);
    if (!opts.out_path.empty()) {
        auto file = open_output(opts.out_path);
        render_audit(file, report, opts.format);
    }
    return report.all_satisfied() ? kExitOk : kExitCheckFailure;
}

int cmd_measures(const MeasuresOptions &opts, std::ostream &out) {
    const DensityOperator rho = resolve_state(opts.state);
    const int n = rho.parties();
    if (n < 2) throw Error(ErrorKind::SinglePartySystem, "measures need at least 2 parties");
    std::vector<int> ks = opts.ks;
    if (ks.empty()) {
        for (int k = 1; k <= n - 1; ++k) ks.push_back(k);
    }
    for (int k : ks) {
        if (k < 1 || k > n - 1) {
            throw Error(ErrorKind::BadK, "k = " + std::to_string(k) + " is invalid for n = " + std::to_string(n) +
                                             "; valid range is 1.." + std::to_string(n - 1) +
                                             " (I_{n-k} additionally needs k <= " + std::to_string(n - 2) + ")");
        }
    }
    render_profile(out, correlation_profile(rho), ks, opts.format);
    return kExitOk;
}

int cmd_sweep_wghz(const SweepOptions &opts, std::ostream &out) {
    const auto rows = wghz_sweep(opts.steps);
    if (opts.out_path.empty()) {
        write_sweep_csv(out, rows);
    } else {
        auto file = open_output(opts.out_path);
        write_sweep_csv(file, rows);
        if (!file) throw Error(ErrorKind::IoError, "write failed for " + opts.out_path);
    }
    return kExitOk;
}

int cmd_random_audit(const RandomAuditOptions &opts, std::ostream &out) {
    if (opts.config.samples < 1) {
        throw Error(ErrorKind::UsageError, "--samples must be at least 1");
    }
    const EnsembleSummary summary = run_ensemble(opts.config);
    render_ensemble(out, summary, opts.format);
    if (!opts.out_path.empty()) {
        auto file = open_output(opts.out_path);
        render_ensemble(file, summary, Format::Csv);
    }
    return summary.all_satisfied() ? kExitOk : kExitCheckFailure;
}

int cmd_convert(const ConvertOptions &opts, std::ostream &out) {
    const DensityOperator rho = resolve_state(opts.state);
    if (opts.out_path.empty()) {
        pretty_print(out, rho);
    } else {
        save_state(opts.out_path, rho);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// Argument parsing

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Multipartite total-correlation measures and entropy-inequality audits"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{{"text", Format::Text}, {"csv", Format::Csv}};
    const std::map<std::string, Family> families{
        {"ginibre", Family::Ginibre}, {"haar", Family::HaarPure}, {"chi", Family::Chi}};
    const std::string state_help = "state file or builtin (" + [] {
        std::string s;
        for (const auto &n : builtin_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }() + ")";

    AuditOptions audit;
    auto *audit_cmd = app.add_subcommand("audit", "Evaluate every applicable relation on one state");
    audit_cmd->add_option("state", audit.state, state_help)->required();
    audit_cmd->add_option("--tolerance-ineq", audit.tolerances.inequality, "inequality tolerance (bits)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    audit_cmd->add_option("--tolerance-eq", audit.tolerances.equality, "equality tolerance (bits)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    audit_cmd->add_option("--format", audit.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    audit_cmd->add_option("--out", audit.out_path, "also write the report to this file");

    MeasuresOptions measures;
    auto *measures_cmd = app.add_subcommand("measures", "Print the correlation profile of one state");
    measures_cmd->add_option("state", measures.state, state_help)->required();
    measures_cmd->add_option("--k", measures.ks, "k values for I_{n-k} and S_k (comma separated)")->delimiter(',');
    measures_cmd->add_option("--format", measures.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    SweepOptions sweep;
    auto *sweep_cmd = app.add_subcommand("sweep-wghz", "CSV of retc and pairwise MI sum along the W/GHZ mixture");
    sweep_cmd->add_option("--steps", sweep.steps, "grid points including p=0 and p=1")->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out_path, "output CSV path (stdout if omitted)");

    RandomAuditOptions random;
    std::string shape_text = "2,2,2";
    auto *random_cmd = app.add_subcommand("random-audit", "Audit a seeded random ensemble, report worst margins");
    random_cmd->add_option("--shape", shape_text, "local dimensions, comma separated")->capture_default_str();
    std::string family_text = "ginibre";
    random_cmd->add_option("--family", family_text, "ensemble family: ginibre, haar or chi")
        ->check(CLI::IsMember({"ginibre", "haar", "chi"}))
        ->capture_default_str();
    random_cmd->add_option("--rank", random.config.rank, "Ginibre rank (0 = full)")->capture_default_str();
    random_cmd->add_option("--samples", random.config.samples, "number of states")->capture_default_str();
    random_cmd->add_option("--seed", random.config.seed, "base seed")->capture_default_str();
    random_cmd->add_option("--threads", random.config.threads, "worker threads")->capture_default_str();
    random_cmd->add_option("--tolerance-ineq", random.config.tolerances.inequality, "inequality tolerance (bits)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    random_cmd->add_option("--tolerance-eq", random.config.tolerances.equality, "equality tolerance (bits)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    random_cmd->add_option("--format", random.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    random_cmd->add_option("--out", random.out_path, "CSV of worst margins per check");

    ConvertOptions convert;
    auto *convert_cmd = app.add_subcommand("convert", "Pretty-print a state, or write it as a state file with --out");
    convert_cmd->add_option("state", convert.state, state_help)->required();
    convert_cmd->add_option("--out", convert.out_path, "write a qstate v1 file instead of printing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*audit_cmd) return cmd_audit(audit, out);
        if (*measures_cmd) return cmd_measures(measures, out);
        if (*sweep_cmd) return cmd_sweep_wghz(sweep, out);
        if (*random_cmd) {
            std::vector<int> dims;
            std::stringstream ss(shape_text);
            for (std::string item; std::getline(ss, item, ',');) {
                try {
                    dims.push_back(std::stoi(item));
                } catch (const std::exception &) {
                    throw Error(ErrorKind::UsageError, "bad --shape entry '" + item + "'");
                }
            }
            random.config.shape = SystemShape(std::move(dims));
            random.config.family = families.at(family_text);
            return cmd_random_audit(random, out);
        }
        if (*convert_cmd) return cmd_convert(convert, out);
    } catch (const Error &e) {
        err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kExitUsage;
}

} // namespace qcorr::cli
