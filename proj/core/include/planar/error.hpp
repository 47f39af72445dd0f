// Copyright 2026 The planar-pentanomials Authors.
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

#ifndef PLANAR_ERROR_HPP
#define PLANAR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace planar {

enum class ErrorCode {
  kInvalidField,
  kReducibleModulus,
  kLevelMismatch,
  kDivisionByZero,
  kScaleExceeded,
  kInadmissibleTriple,
  kSymmetryViolated,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Error raised by every fallible library operation. The code identifies
/// the failure class; what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace planar

#endif  // PLANAR_ERROR_HPP
