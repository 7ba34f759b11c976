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

#include "qcorr/error.hpp"

namespace qcorr {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NonHermitian: return "NonHermitian";
    case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::BadNorm: return "BadNorm";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BadSubsystemSet: return "BadSubsystemSet";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::BadDistribution: return "BadDistribution";
    case ErrorKind::TooManyOutcomes: return "TooManyOutcomes";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BadCut: return "BadCut";
    case ErrorKind::SinglePartySystem: return "SinglePartySystem";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::InfiniteTerm: return "InfiniteTerm";
    case ErrorKind::NegativeBeyondTolerance: return "NegativeBeyondTolerance";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::UsageError: return "UsageError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message, std::optional<double> magnitude)
    : std::runtime_error(message), kind_(kind), magnitude_(magnitude) {}

} // namespace qcorr
