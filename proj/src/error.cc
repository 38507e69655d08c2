// Copyright 2026 The scp-cro Authors.
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

#include "scp/error.h"

namespace scp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUncoverableRow:
      return "UncoverableRow";
    case ErrorCode::kBadDimension:
      return "BadDimension";
    case ErrorCode::kNonPositiveCost:
      return "NonPositiveCost";
    case ErrorCode::kNotACover:
      return "NotACover";
    case ErrorCode::kTruncatedFile:
      return "TruncatedFile";
    case ErrorCode::kIndexOutOfRange:
      return "IndexOutOfRange";
    case ErrorCode::kBadToken:
      return "BadToken";
    case ErrorCode::kTrailingData:
      return "TrailingData";
    case ErrorCode::kBadDensity:
      return "BadDensity";
    case ErrorCode::kVersionMismatch:
      return "VersionMismatch";
    case ErrorCode::kBudgetExhausted:
      return "BudgetExhausted";
    case ErrorCode::kUnknownInstanceForBks:
      return "UnknownInstanceForBks";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

}  // namespace scp
