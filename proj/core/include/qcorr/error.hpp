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

#ifndef QCORR_ERROR_HPP
#define QCORR_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcorr {

enum class ErrorKind {
    // linalg
    NonSquare,
    NonHermitian,
    NegativeEigenvalue,
    DimensionMismatch,
    NonFinite,
    // states
    InvalidShape,
    BadNorm,
    LengthMismatch,
    BadSubsystemSet,
    BadArity,
    BadParameter,
    BadDistribution,
    TooManyOutcomes,
    BadRank,
    InvariantViolation,
    // correlations
    ShapeMismatch,
    BadCut,
    SinglePartySystem,
    BadK,
    NotPure,
    WrongArity,
    InfiniteTerm,
    NegativeBeyondTolerance,
    // audit
    BadPermutation,
    // io / cli
    ParseError,
    IoError,
    UsageError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library. `kind()` is stable and meant for
/// dispatch; the message is for humans. `magnitude()` carries the measured
/// violation for tolerance failures (e.g. |tr(rho) - 1|).
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message, std::optional<double> magnitude = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<double> magnitude() const noexcept { return magnitude_; }

  private:
    ErrorKind kind_;
    std::optional<double> magnitude_;
};

} // namespace qcorr

#endif // QCORR_ERROR_HPP
