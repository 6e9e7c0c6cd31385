// Copyright 2026 The Liftcover Authors
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

#ifndef LIFTCOVER_ERROR_H_
#define LIFTCOVER_ERROR_H_

#include <stdexcept>
#include <string>

namespace liftcover {

// Mirrors lc_status in liftcover.h; the C layer maps one onto the other.
enum class ErrorCode {
  kInvalidArgument = 1,
  kIndexOutOfRange,
  kNotACover,
  kNotMinimal,
  kPreconditionViolated,
  kBudgetExceeded,
  kParseError,
  kIoError,
  kInfeasibleRow,
  kNumericalFailure,
  kOverflow,
  kDimensionMismatch,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace liftcover

#endif  // LIFTCOVER_ERROR_H_
