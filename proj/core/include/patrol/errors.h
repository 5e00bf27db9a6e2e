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


#ifndef PATROL_ERRORS_H_
#define PATROL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace patrol {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  // Graph construction.
  kDuplicateEdge,
  kSelfLoop,
  kNonPositiveLength,
  kNodeOutOfRange,
  kGenerationBudgetExceeded,
  // Route validation.
  kNotClosedWalk,
  kNotAWalk,
  kNotInF1,
  // Evaluation.
  kNegativeGap,
  kStepTooCoarse,
  // Eulerian cycles.
  kNotEulerian,
  kStranded,
  kCapExceeded,
  // Postman augmentation.
  kTooManyOddVertices,
  // Exhaustive search.
  kBudgetExceeded,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for the codes that signal an exhausted search or retry budget rather
// than malformed input.
bool IsBudgetError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace patrol

#endif  // PATROL_ERRORS_H_
