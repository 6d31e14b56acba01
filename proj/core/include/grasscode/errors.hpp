// Copyright 2026 The Grasscode Authors
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

#ifndef GRASSCODE_ERRORS_HPP_
#define GRASSCODE_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace grasscode {

// Every failure raised by the library carries one of these codes. The CLI
// maps them onto its structured error payload.
enum class ErrorCode {
  kRankDeficient,
  kNotOrthonormal,
  kDimensionMismatch,
  kInvalidDimensions,
  kChartSingular,
  kMomentDiverges,
  kDomainError,
  kInvalidCardinality,
  kIntersectingSubspaces,
  kInvalidArgument,
  kMalformedCodeFile,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace grasscode

#endif  // GRASSCODE_ERRORS_HPP_
