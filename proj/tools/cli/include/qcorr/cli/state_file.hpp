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

#ifndef QCORR_CLI_STATE_FILE_HPP
#define QCORR_CLI_STATE_FILE_HPP

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "qcorr/states.hpp"

namespace qcorr::cli {

// Text state format, one record per line:
//
//   qstate v1
//   dims: d1 d2 ... dn
//   re,im re,im ...      (D lines of D entries, D = d1 * ... * dn)
//
// Lines starting with '#' and blank lines are ignored. Numbers are written
// with 17 significant digits so a save/load cycle is exact.

/// Parses a state; `source` names the input in diagnostics. Throws
/// ParseError ("source:line:column: ...") or InvariantViolation.
DensityOperator parse_state(std::istream &in, const std::string &source = "<input>");
DensityOperator load_state(const std::filesystem::path &path);

void write_state(std::ostream &out, const DensityOperator &rho);
void save_state(const std::filesystem::path &path, const DensityOperator &rho);

/// Shortest decimal with 17 significant digits, independent of locale.
std::string format_double(double value);

/// Human-readable matrix rendering used by `convert`.
void pretty_print(std::ostream &out, const DensityOperator &rho);

} // namespace qcorr::cli

#endif // QCORR_CLI_STATE_FILE_HPP
