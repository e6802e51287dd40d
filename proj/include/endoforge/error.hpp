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

#ifndef ENDOFORGE_ERROR_HPP_
#define ENDOFORGE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace endoforge {

// Every failure raised by the library carries one of these codes. The CLI
// maps kMalformed* to exit status 2 and everything else to exit status 1.
enum class ErrorCode {
  kMalformedTable,
  kMalformedInput,
  kNotAssociative,
  kBadIdentity,
  kNotPartialOrder,
  kNotLattice,
  kNotCommutativeIdempotent,
  kNoJoin,
  kSizeOverflow,
  kNotPrime,
  kNotGenerating,
  kTooManyGenerators,
  kNoColors,
  kNotAWalk,
  kNotEndomorphism,
  kHasLoops,
  kMinDegreeViolation,
  kKTooSmall,
  kBadChain,
  kNotPrincipal,
  kBudgetExceeded,
  kNotClosed,
  kPreconditionFailed,
  kInvariantViolated,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_malformed_input() const noexcept {
    return code_ == ErrorCode::kMalformedTable ||
           code_ == ErrorCode::kMalformedInput;
  }

 private:
  ErrorCode code_;
};

}  // namespace endoforge

#endif  // ENDOFORGE_ERROR_HPP_
