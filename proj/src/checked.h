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
#ifndef THINWIDTH_SRC_CHECKED_H_
#define THINWIDTH_SRC_CHECKED_H_

#include <cstdint>

#include "thinwidth/error.h"

namespace thinwidth::internal {

inline std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer addition overflows int64");
  }
  return out;
}

inline std::int64_t CheckedSub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer subtraction overflows int64");
  }
  return out;
}

inline std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer product overflows int64");
  }
  return out;
}

}  // namespace thinwidth::internal

#endif  // THINWIDTH_SRC_CHECKED_H_
