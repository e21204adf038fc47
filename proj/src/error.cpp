// Copyright 2026 The seqprod Authors
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

#include "seqprod/error.hpp"

namespace seqprod {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotEffect: return "NotEffect";
    case ErrorKind::NotState: return "NotState";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::BadWeights: return "BadWeights";
    case ErrorKind::NotContraction: return "NotContraction";
    case ErrorKind::WrongMeasuredEffect: return "WrongMeasuredEffect";
    case ErrorKind::ComplementMismatch: return "ComplementMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::OutcomeMismatch: return "OutcomeMismatch";
    case ErrorKind::ImaginaryResidue: return "ImaginaryResidue";
    case ErrorKind::NegativeVariance: return "NegativeVariance";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

}  // namespace seqprod
