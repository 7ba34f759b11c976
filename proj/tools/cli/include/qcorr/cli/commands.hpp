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

#ifndef QCORR_CLI_COMMANDS_HPP
#define QCORR_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qcorr/audit.hpp"
#include "qcorr/error.hpp"

namespace qcorr::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailure = 1,
    kExitUsage = 2,
    kExitInvalidInput = 3,
};

int exit_code_for(ErrorKind kind);

enum class Format { Text, Csv };

// --- builtin states --------------------------------------------------------

/// Names accepted in place of a state file: ghz2..ghz6, w3, chi-uniform-2,
/// product-bell, wghz:p=<value>.
std::vector<std::string> builtin_names();

/// The named builtin, or nullopt if `name` is not one. Throws BadParameter
/// for a malformed wghz:p=... value.
std::optional<DensityOperator> builtin_state(const std::string &name);

/// Builtin name or path to a state file.
DensityOperator resolve_state(const std::string &spec);

// --- W-GHZ sweep ------------------------------------------------------------

struct SweepRow {
    double p = 0.0;
    double retc = 0.0;
    double i2_sum = 0.0;
    double gap = 0.0; // retc - i2_sum
    double residual = 0.0;
};

/// `steps` evenly spaced mixture weights from 0 to 1 inclusive.
std::vector<SweepRow> wghz_sweep(int steps);
void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows);

// --- rendering ----------------------------------------------------------------

void render_audit(std::ostream &out, const AuditReport &report, Format format);
void render_profile(std::ostream &out, const CorrelationProfile &profile, const std::vector<int> &ks, Format format);
void render_ensemble(std::ostream &out, const EnsembleSummary &summary, Format format);

// --- subcommands --------------------------------------------------------------
// Each returns a process exit code; library errors propagate as qcorr::Error.

struct AuditOptions {
    std::string state;
    Tolerances tolerances;
    Format format = Format::Text;
    std::string out_path;
};
int cmd_audit(const AuditOptions &opts, std::ostream &out);

struct MeasuresOptions {
    std::string state;
    /// Empty selects every valid k.
    std::vector<int> ks;
    Format format = Format::Text;
};
int cmd_measures(const MeasuresOptions &opts, std::ostream &out);

struct SweepOptions {
    int steps = 101;
    std::string out_path;
};
int cmd_sweep_wghz(const SweepOptions &opts, std::ostream &out);

struct RandomAuditOptions {
    EnsembleConfig config;
    Format format = Format::Text;
    std::string out_path;
};
int cmd_random_audit(const RandomAuditOptions &opts, std::ostream &out);

struct ConvertOptions {
    std::string state;
    std::string out_path;
};
int cmd_convert(const ConvertOptions &opts, std::ostream &out);

/// Parses argv and dispatches. Errors are reported on `err` and mapped to
/// exit codes.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qcorr::cli

#endif // QCORR_CLI_COMMANDS_HPP
