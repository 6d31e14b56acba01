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

#include "grasscode/errors.hpp"

namespace grasscode {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kRankDeficient:
      return "RankDeficient";
    case ErrorCode::kNotOrthonormal:
      return "NotOrthonormal";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kInvalidDimensions:
      return "InvalidDimensions";
    case ErrorCode::kChartSingular:
      return "ChartSingular";
    case ErrorCode::kMomentDiverges:
      return "MomentDiverges";
    case ErrorCode::kDomainError:
      return "DomainError";
    case ErrorCode::kInvalidCardinality:
      return "InvalidCardinality";
    case ErrorCode::kIntersectingSubspaces:
      return "IntersectingSubspaces";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kMalformedCodeFile:
      return "MalformedCodeFile";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace grasscode
