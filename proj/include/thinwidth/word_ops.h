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
// Width-monotone rewriting of Morse words.
//
// A type-1 step deletes a minimum at position i together with a later
// maximum at position j. A type-2 step exchanges the adjacent letters at i
// and i + 1 unless they read "ba". Neither step increases width, so any
// legal sequence of them yields a non-increasing width trace.

#ifndef THINWIDTH_WORD_OPS_H_
#define THINWIDTH_WORD_OPS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "thinwidth/morse_word.h"

namespace thinwidth {

struct OpStep {
  enum class Kind { kType1, kType2 };

  Kind kind = Kind::kType2;
  std::size_t i = 1;
  std::size_t j = 0;  // used by type 1 only

  static OpStep Type1(std::size_t i, std::size_t j) {
    return {Kind::kType1, i, j};
  }
  static OpStep Type2(std::size_t i) { return {Kind::kType2, i, 0}; }

  std::string ToString() const;  // "type1@(i,j)" or "type2@i"

  bool operator==(const OpStep&) const = default;
};

MorseWord Type1Delete(const MorseWord& word, std::size_t i, std::size_t j);
MorseWord Type2Swap(const MorseWord& word, std::size_t i);
MorseWord Apply(const MorseWord& word, const OpStep& step);

// Closed form for width(word) - width(Type1Delete(word, i, j)):
// prefix[i] + prefix[j] + 2 (j - i - 1). Preconditions as Type1Delete.
std::int64_t Type1WidthDrop(const MorseWord& word, std::size_t i,
                            std::size_t j);

// 4 for an "ab" pair, 0 for equal letters. Preconditions as Type2Swap.
std::int64_t Type2WidthDrop(const MorseWord& word, std::size_t i);

// Every step currently legal on `word`, type 1 first, in position order.
std::vector<OpStep> LegalSteps(const MorseWord& word);

// The legal steps that cannot raise the width: every type 2 step, and type 1
// steps only while every prefix of `word` is nonnegative. Without that
// hypothesis a deletion can raise the width ("bab" -> "b").
std::vector<OpStep> MonotoneSteps(const MorseWord& word);

struct SequenceResult {
  MorseWord word;
  std::vector<std::int64_t> widths;     // width after each step
  std::vector<Validity> validities;     // validity after each step
};

// Applies the steps in order. A failing step rethrows its error tagged
// with the 1-indexed step number.
SequenceResult ApplySequence(const MorseWord& word,
                             std::span<const OpStep> steps);

// {"kind":"type1","i":..,"j":..} | {"kind":"type2","i":..}
nlohmann::json ToJson(const OpStep& step);
// Throws kParseError for anything that is not one of the two shapes.
OpStep OpStepFromJson(const nlohmann::json& value);
std::vector<OpStep> OpStepsFromJson(const nlohmann::json& value);

}  // namespace thinwidth

#endif  // THINWIDTH_WORD_OPS_H_
