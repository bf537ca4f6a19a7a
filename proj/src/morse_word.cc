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
#include "thinwidth/morse_word.h"

#include <algorithm>

#include "checked.h"
#include "thinwidth/error.h"

namespace thinwidth {

char ToChar(Letter letter) { return letter == Letter::kMin ? 'a' : 'b'; }

Letter Opposite(Letter letter) {
  return letter == Letter::kMin ? Letter::kMax : Letter::kMin;
}

MorseWord MorseWord::Parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    switch (text[k]) {
      case 'a': letters.push_back(Letter::kMin); break;
      case 'b': letters.push_back(Letter::kMax); break;
      default:
        throw Error(ErrorCode::kInvalidCharacter,
                    "character at index " + std::to_string(k) +
                        " is not 'a' or 'b'",
                    k);
    }
  }
  return MorseWord(std::move(letters));
}

std::string MorseWord::ToString() const {
  std::string out(letters_.size(), 'a');
  std::transform(letters_.begin(), letters_.end(), out.begin(), ToChar);
  return out;
}

Letter MorseWord::At(std::size_t position) const {
  if (position < 1 || position > letters_.size()) {
    throw Error(ErrorCode::kBadPosition,
                "position " + std::to_string(position) + " outside 1.." +
                    std::to_string(letters_.size()),
                position);
  }
  return letters_[position - 1];
}

std::size_t MorseWord::CountMin() const {
  return static_cast<std::size_t>(
      std::count(letters_.begin(), letters_.end(), Letter::kMin));
}

MorseWord MorseWord::Flipped() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  std::transform(out.begin(), out.end(), out.begin(), Opposite);
  return MorseWord(std::move(out));
}

std::string_view ValidityName(Validity validity) {
  switch (validity) {
    case Validity::kFormal: return "formal";
    case Validity::kBalanced: return "balanced";
    case Validity::kNonnegative: return "nonnegative";
    case Validity::kKnot: return "knot";
  }
  return "formal";
}

bool WidthProfile::AllPrefixesNonnegative() const {
  return std::all_of(prefix.begin(), prefix.end(),
                     [](std::int64_t p) { return p >= 0; });
}

WidthProfile Profile(const MorseWord& word) {
  const std::size_t t = word.size();
  if (t > kMaxWordLength) {
    throw Error(ErrorCode::kOverflow,
                "word of length " + std::to_string(t) +
                    " exceeds the width computation limit");
  }
  WidthProfile profile;
  profile.prefix.reserve(t);
  std::int64_t level = 0;
  std::int64_t interior_min = 2;
  std::int64_t overall_min = 0;
  for (std::size_t k = 0; k < t; ++k) {
    level += word.letters()[k] == Letter::kMin ? 2 : -2;
    profile.prefix.push_back(level);
    profile.width = internal::CheckedAdd(profile.width, level);
    overall_min = std::min(overall_min, level);
    if (k + 1 < t) interior_min = std::min(interior_min, level);
  }

  if (level != 0) {
    profile.validity = Validity::kFormal;
    return profile;
  }
  profile.bridge = static_cast<std::int64_t>(t / 2);
  if (t >= 2 && interior_min >= 2) {
    profile.validity = Validity::kKnot;
  } else if (overall_min >= 0) {
    profile.validity = Validity::kNonnegative;
  } else {
    profile.validity = Validity::kBalanced;
  }
  return profile;
}

std::int64_t Width(const MorseWord& word) { return Profile(word).width; }

std::int64_t BridgeNumber(const MorseWord& word) {
  if (word.CountMin() * 2 != word.size()) {
    throw Error(ErrorCode::kNotBalanced,
                "word '" + word.ToString() + "' has " +
                    std::to_string(word.CountMin()) + " minima and " +
                    std::to_string(word.CountMax()) + " maxima");
  }
  return static_cast<std::int64_t>(word.size() / 2);
}

Validity Classify(const MorseWord& word) { return Profile(word).validity; }

nlohmann::json ToJson(const MorseWord& word, const WidthProfile& profile) {
  nlohmann::json out;
  out["word"] = word.ToString();
  out["prefix"] = profile.prefix;
  out["width"] = profile.width;
  out["bridge"] = profile.bridge ? nlohmann::json(*profile.bridge)
                                 : nlohmann::json(nullptr);
  out["validity"] = std::string(ValidityName(profile.validity));
  return out;
}

}  // namespace thinwidth
