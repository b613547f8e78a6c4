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

#include "coheq/errors.hpp"

namespace coheq {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::UnstableInput: return "UnstableInput";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::NotFactorable: return "NotFactorable";
    case ErrorCode::GammaTooSmall: return "GammaTooSmall";
    case ErrorCode::GammaTooLarge: return "GammaTooLarge";
    case ErrorCode::BetaNotAdmissible: return "BetaNotAdmissible";
    case ErrorCode::ThetaNotContractive: return "ThetaNotContractive";
    case ErrorCode::ThetaUnstable: return "ThetaUnstable";
    case ErrorCode::ThetaOutOfInterval: return "ThetaOutOfInterval";
    case ErrorCode::ConditionNineFourFails: return "ConditionNineFourFails";
    case ErrorCode::RankDropOnAxis: return "RankDropOnAxis";
    case ErrorCode::NotContractive: return "NotContractive";
    case ErrorCode::DegenerateChannel: return "DegenerateChannel";
    case ErrorCode::BranchMismatch: return "BranchMismatch";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::DuplicateNodes: return "DuplicateNodes";
    case ErrorCode::NodeInLeftHalfPlane: return "NodeInLeftHalfPlane";
    case ErrorCode::CannotAchievePD: return "CannotAchievePD";
    case ErrorCode::PickNotPD: return "PickNotPD";
    case ErrorCode::ThetaNotAdmissible: return "ThetaNotAdmissible";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace coheq
