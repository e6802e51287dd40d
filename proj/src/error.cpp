// Copyright 2026 The endoforge Authors
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

#include "endoforge/error.hpp"

namespace endoforge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedTable: return "MalformedTable";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kNotAssociative: return "NotAssociative";
    case ErrorCode::kBadIdentity: return "BadIdentity";
    case ErrorCode::kNotPartialOrder: return "NotPartialOrder";
    case ErrorCode::kNotLattice: return "NotLattice";
    case ErrorCode::kNotCommutativeIdempotent: return "NotCommutativeIdempotent";
    case ErrorCode::kNoJoin: return "NoJoin";
    case ErrorCode::kSizeOverflow: return "SizeOverflow";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotGenerating: return "NotGenerating";
    case ErrorCode::kTooManyGenerators: return "TooManyGenerators";
    case ErrorCode::kNoColors: return "NoColors";
    case ErrorCode::kNotAWalk: return "NotAWalk";
    case ErrorCode::kNotEndomorphism: return "NotEndomorphism";
    case ErrorCode::kHasLoops: return "HasLoops";
    case ErrorCode::kMinDegreeViolation: return "MinDegreeViolation";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kBadChain: return "BadChain";
    case ErrorCode::kNotPrincipal: return "NotPrincipal";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kInvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

}  // namespace endoforge
