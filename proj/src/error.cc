// Copyright 2026 The Thinwidth Authors.
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
#include "thinwidth/error.h"

namespace thinwidth {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidCharacter: return "INVALID_CHARACTER";
    case ErrorCode::kNotBalanced: return "NOT_BALANCED";
    case ErrorCode::kOverflow: return "OVERFLOW";
    case ErrorCode::kBadLetter: return "BAD_LETTER";
    case ErrorCode::kBadPosition: return "BAD_POSITION";
    case ErrorCode::kExcludedSwap: return "EXCLUDED_SWAP";
    case ErrorCode::kBadWinding: return "BAD_WINDING";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kNonAdjacentEdge: return "NON_ADJACENT_EDGE";
    case ErrorCode::kDuplicateId: return "DUPLICATE_ID";
    case ErrorCode::kDisconnected: return "DISCONNECTED";
    case ErrorCode::kNoLoop: return "NO_LOOP";
    case ErrorCode::kMultipleLoops: return "MULTIPLE_LOOPS";
    case ErrorCode::kNotACycle: return "NOT_A_CYCLE";
    case ErrorCode::kLimitExceeded: return "LIMIT_EXCEEDED";
    case ErrorCode::kUnknownSuite: return "UNKNOWN_SUITE";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      position_(position) {}

Error Error::AtStep(std::size_t step) const {
  Error tagged = *this;
  tagged.step_ = step;
  return tagged;
}

}  // namespace thinwidth
