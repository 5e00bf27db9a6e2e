// Copyright 2026 The Authors.
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


#include "patrol/errors.h"

namespace patrol {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kNonPositiveLength: return "NonPositiveLength";
    case ErrorCode::kNodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::kGenerationBudgetExceeded: return "GenerationBudgetExceeded";
    case ErrorCode::kNotClosedWalk: return "NotClosedWalk";
    case ErrorCode::kNotAWalk: return "NotAWalk";
    case ErrorCode::kNotInF1: return "NotInF1";
    case ErrorCode::kNegativeGap: return "NegativeGap";
    case ErrorCode::kStepTooCoarse: return "StepTooCoarse";
    case ErrorCode::kNotEulerian: return "NotEulerian";
    case ErrorCode::kStranded: return "Stranded";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kTooManyOddVertices: return "TooManyOddVertices";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

bool IsBudgetError(ErrorCode code) {
  return code == ErrorCode::kGenerationBudgetExceeded ||
         code == ErrorCode::kCapExceeded ||
         code == ErrorCode::kTooManyOddVertices ||
         code == ErrorCode::kBudgetExceeded;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace patrol
