// Copyright 2026 The avecbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "avec/error.hpp"

namespace avec {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kInvalidEdge: return "InvalidEdge";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kInvalidWeights: return "InvalidWeights";
    case ErrorCode::kNotPrimePower: return "NotPrimePower";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kInvalidChainSpec: return "InvalidChainSpec";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kMissingParameter: return "MissingParameter";
    case ErrorCode::kNotApplicable: return "NotApplicable";
    case ErrorCode::kNotGirthSix: return "NotGirthSix";
    case ErrorCode::kConstructionInvariantViolated:
      return "ConstructionInvariantViolated";
    case ErrorCode::kLemmaBoundViolated: return "LemmaBoundViolated";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kArithmeticOverflow: return "ArithmeticOverflow";
  }
  return "Unknown";
}

}  // namespace avec
