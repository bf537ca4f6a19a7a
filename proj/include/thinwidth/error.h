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
#ifndef THINWIDTH_ERROR_H_
#define THINWIDTH_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace thinwidth {

enum class ErrorCode {
  kInvalidCharacter,
  kNotBalanced,
  kOverflow,
  kBadLetter,
  kBadPosition,
  kExcludedSwap,
  kBadWinding,
  kParseError,
  kNonAdjacentEdge,
  kDuplicateId,
  kDisconnected,
  kNoLoop,
  kMultipleLoops,
  kNotACycle,
  kLimitExceeded,
  kUnknownSuite,
};

// Upper-case identifier such as "NOT_BALANCED".
std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `position` is a 1-indexed letter
// position (or the 0-indexed character offset for kInvalidCharacter);
// `step` is the 1-indexed step of an operation sequence that failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const { return code_; }
  std::optional<std::size_t> position() const { return position_; }
  std::optional<std::size_t> step() const { return step_; }

  // Copy of this error tagged with the sequence step it occurred in.
  Error AtStep(std::size_t step) const;

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
  std::optional<std::size_t> step_;
};

}  // namespace thinwidth

#endif  // THINWIDTH_ERROR_H_
