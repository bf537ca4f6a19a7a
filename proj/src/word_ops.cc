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
#include "thinwidth/word_ops.h"

#include <utility>

#include "thinwidth/error.h"

namespace thinwidth {
namespace {

void RequireType1(const MorseWord& word, std::size_t i, std::size_t j) {
  if (i < 1 || j > word.size() || i >= j) {
    throw Error(ErrorCode::kBadPosition,
                "type 1 needs 1 <= i < j <= " + std::to_string(word.size()) +
                    ", got (" + std::to_string(i) + ", " + std::to_string(j) +
                    ")",
                i);
  }
  if (word.At(i) != Letter::kMin) {
    throw Error(ErrorCode::kBadLetter,
                "letter " + std::to_string(i) + " is not a minimum", i);
  }
  if (word.At(j) != Letter::kMax) {
    throw Error(ErrorCode::kBadLetter,
                "letter " + std::to_string(j) + " is not a maximum", j);
  }
}

void RequireType2(const MorseWord& word, std::size_t i) {
  if (i < 1 || i + 1 > word.size()) {
    throw Error(ErrorCode::kBadPosition,
                "type 2 needs 1 <= i <= " +
                    std::to_string(word.size() > 0 ? word.size() - 1 : 0) +
                    ", got " + std::to_string(i),
                i);
  }
  if (word.At(i) == Letter::kMax && word.At(i + 1) == Letter::kMin) {
    throw Error(ErrorCode::kExcludedSwap,
                "letters " + std::to_string(i) + ", " + std::to_string(i + 1) +
                    " read \"ba\"",
                i);
  }
}

// Strand count just above critical point `position` (1-indexed).
std::int64_t PrefixAt(const MorseWord& word, std::size_t position) {
  std::int64_t level = 0;
  for (std::size_t k = 0; k < position; ++k) {
    level += word.letters()[k] == Letter::kMin ? 2 : -2;
  }
  return level;
}

}  // namespace

std::string OpStep::ToString() const {
  if (kind == Kind::kType1) {
    return "type1@(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return "type2@" + std::to_string(i);
}

MorseWord Type1Delete(const MorseWord& word, std::size_t i, std::size_t j) {
  RequireType1(word, i, j);
  std::vector<Letter> out;
  out.reserve(word.size() - 2);
  for (std::size_t k = 1; k <= word.size(); ++k) {
    if (k != i && k != j) out.push_back(word.At(k));
  }
  return MorseWord(std::move(out));
}

MorseWord Type2Swap(const MorseWord& word, std::size_t i) {
  RequireType2(word, i);
  std::vector<Letter> out(word.letters().begin(), word.letters().end());
  std::swap(out[i - 1], out[i]);
  return MorseWord(std::move(out));
}

MorseWord Apply(const MorseWord& word, const OpStep& step) {
  return step.kind == OpStep::Kind::kType1 ? Type1Delete(word, step.i, step.j)
                                           : Type2Swap(word, step.i);
}

std::int64_t Type1WidthDrop(const MorseWord& word, std::size_t i,
                            std::size_t j) {
  RequireType1(word, i, j);
  const auto gap = static_cast<std::int64_t>(j - i - 1);
  return PrefixAt(word, i) + PrefixAt(word, j) + 2 * gap;
}

std::int64_t Type2WidthDrop(const MorseWord& word, std::size_t i) {
  RequireType2(word, i);
  return word.At(i) == word.At(i + 1) ? 0 : 4;
}

std::vector<OpStep> LegalSteps(const MorseWord& word) {
  std::vector<OpStep> steps;
  const auto letters = word.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] != Letter::kMin) continue;
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      if (letters[j] == Letter::kMax) steps.push_back(OpStep::Type1(i + 1, j + 1));
    }
  }
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letters[i] == Letter::kMin || letters[i + 1] == Letter::kMax) {
      steps.push_back(OpStep::Type2(i + 1));
    }
  }
  return steps;
}

std::vector<OpStep> MonotoneSteps(const MorseWord& word) {
  std::vector<OpStep> steps = LegalSteps(word);
  if (!Profile(word).AllPrefixesNonnegative()) {
    std::erase_if(steps, [](const OpStep& step) {
      return step.kind == OpStep::Kind::kType1;
    });
  }
  return steps;
}

SequenceResult ApplySequence(const MorseWord& word,
                             std::span<const OpStep> steps) {
  SequenceResult result{word, {}, {}};
  result.widths.reserve(steps.size());
  result.validities.reserve(steps.size());
  for (std::size_t s = 0; s < steps.size(); ++s) {
    try {
      result.word = Apply(result.word, steps[s]);
    } catch (const Error& e) {
      throw e.AtStep(s + 1);
    }
    const WidthProfile profile = Profile(result.word);
    result.widths.push_back(profile.width);
    result.validities.push_back(profile.validity);
  }
  return result;
}

nlohmann::json ToJson(const OpStep& step) {
  if (step.kind == OpStep::Kind::kType1) {
    return {{"kind", "type1"}, {"i", step.i}, {"j", step.j}};
  }
  return {{"kind", "type2"}, {"i", step.i}};
}

namespace {

std::size_t PositionField(const nlohmann::json& value, const char* key) {
  if (!value.contains(key) || !value[key].is_number_integer() ||
      value[key].get<std::int64_t>() < 1) {
    throw Error(ErrorCode::kParseError,
                std::string("op step needs a positive integer \"") + key +
                    "\": " + value.dump());
  }
  return value[key].get<std::size_t>();
}

}  // namespace

OpStep OpStepFromJson(const nlohmann::json& value) {
  if (!value.is_object() || !value.contains("kind") ||
      !value["kind"].is_string()) {
    throw Error(ErrorCode::kParseError,
                "op step must be an object with a \"kind\": " + value.dump());
  }
  const auto kind = value["kind"].get<std::string>();
  if (kind == "type1") {
    if (value.size() != 3) {
      throw Error(ErrorCode::kParseError,
                  "type1 step takes exactly i and j: " + value.dump());
    }
    return OpStep::Type1(PositionField(value, "i"), PositionField(value, "j"));
  }
  if (kind == "type2") {
    if (value.size() != 2) {
      throw Error(ErrorCode::kParseError,
                  "type2 step takes exactly i: " + value.dump());
    }
    return OpStep::Type2(PositionField(value, "i"));
  }
  throw Error(ErrorCode::kParseError, "unknown op kind \"" + kind + "\"");
}

std::vector<OpStep> OpStepsFromJson(const nlohmann::json& value) {
  if (!value.is_array()) {
    throw Error(ErrorCode::kParseError, "op sequence must be a JSON array");
  }
  std::vector<OpStep> steps;
  steps.reserve(value.size());
  for (const auto& item : value) steps.push_back(OpStepFromJson(item));
  return steps;
}

}  // namespace thinwidth
