// Copyright 2026 The coheq Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coheq {

// Every failure the library reports by exception carries one of these codes.
// The CLI maps them to exit codes and to the "error" field of its JSON output.
enum class ErrorCode {
  PoleHit,
  SingularMatrix,
  UnstableInput,
  NotUnitary,
  ParameterOutOfRange,
  NotFactorable,
  GammaTooSmall,
  GammaTooLarge,
  BetaNotAdmissible,
  ThetaNotContractive,
  ThetaUnstable,
  ThetaOutOfInterval,
  ConditionNineFourFails,
  RankDropOnAxis,
  NotContractive,
  DegenerateChannel,
  BranchMismatch,
  Infeasible,
  DuplicateNodes,
  NodeInLeftHalfPlane,
  CannotAchievePD,
  PickNotPD,
  ThetaNotAdmissible,
  DegreeOverflow,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace coheq
