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
// Word-level model of satellites with winding number n: the braid-pattern
// blowup a_1^n ... a_t^n of a companion word, and the per-critical-point
// accounting that bounds the satellite's width below by n^2 times the
// width of the loop word.

#ifndef THINWIDTH_SATELLITE_H_
#define THINWIDTH_SATELLITE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "thinwidth/morse_word.h"

namespace thinwidth {

// Each letter repeated n times in place. Throws kBadWinding for n < 1 and
// kOverflow when the result would be longer than kMaxWordLength.
MorseWord Blowup(const MorseWord& word, std::int64_t n);

struct BoundTerm {
  std::size_t index = 0;  // 1-indexed critical point of the loop word
  Letter kind = Letter::kMin;
  std::int64_t omega = 0;         // prefix[index] of the loop word
  std::int64_t contribution = 0;  // n^2 omega + n(n-1), or - for a maximum
};

// Lower-bound accounting for a satellite of winding number n around a loop.
//
// Sign convention: a minimum contributes n^2 omega + n(n-1) and a maximum
// contributes n^2 omega - n(n-1). Exchanging the signs gives the same total
// because a balanced loop word has as many minima as maxima, so the
// n(n-1) terms cancel and total == n^2 * width(loop_word).
struct BoundReport {
  std::int64_t n = 1;
  MorseWord loop_word;
  std::vector<BoundTerm> terms;
  std::int64_t total = 0;
  bool identity_holds = false;  // total == n^2 * width(loop_word)
};

// Throws kNotBalanced or kBadWinding.
BoundReport LowerBound(const MorseWord& loop_word, std::int64_t n);

// width(satellite_word) - n^2 width(loop_word). Only reports the value; a
// negative gap is meaningful only if the words do not come from a genuine
// satellite/companion pair. Throws kNotBalanced or kBadWinding.
std::int64_t TheoremGap(const MorseWord& satellite_word,
                        const MorseWord& loop_word, std::int64_t n);

nlohmann::json ToJson(const BoundReport& report);

}  // namespace thinwidth

#endif  // THINWIDTH_SATELLITE_H_
