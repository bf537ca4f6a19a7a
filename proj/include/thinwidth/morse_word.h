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
// Morse words: the sequence of local minima ('a') and maxima ('b') of a knot
// embedding read from the lowest critical point to the highest, together
// with the prefix-sum calculus that recovers level-set strand counts, width
// and bridge number from the word alone.

#ifndef THINWIDTH_MORSE_WORD_H_
#define THINWIDTH_MORSE_WORD_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace thinwidth {

enum class Letter : std::uint8_t {
  kMin,  // 'a'
  kMax,  // 'b'
};

char ToChar(Letter letter);
Letter Opposite(Letter letter);

// Words longer than this are rejected by every width computation: below it,
// |width| <= t * (t + 1) fits in a signed 64-bit integer.
inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 31;

class MorseWord {
 public:
  MorseWord() = default;
  explicit MorseWord(std::vector<Letter> letters)
      : letters_(std::move(letters)) {}
  MorseWord(std::initializer_list<Letter> letters) : letters_(letters) {}

  // Accepts only 'a' and 'b'. Throws kInvalidCharacter with the 0-indexed
  // offset of the first other character.
  static MorseWord Parse(std::string_view text);

  std::string ToString() const;

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }

  // 1-indexed access; throws kBadPosition when out of range.
  Letter At(std::size_t position) const;

  std::size_t CountMin() const;
  std::size_t CountMax() const { return size() - CountMin(); }

  // Upside-down copy: reversed order with minima and maxima exchanged.
  MorseWord Flipped() const;

  auto operator<=>(const MorseWord&) const = default;
  bool operator==(const MorseWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Ordered tiers: each tier implies the ones below it.
//   kBalanced     final prefix is 0
//   kNonnegative  balanced and every prefix >= 0
//   kKnot         balanced, t >= 2, every interior prefix >= 2
enum class Validity {
  kFormal,
  kBalanced,
  kNonnegative,
  kKnot,
};

std::string_view ValidityName(Validity validity);  // "knot", "balanced", ...

struct WidthProfile {
  // prefix[i - 1] is the strand count just above critical point i.
  std::vector<std::int64_t> prefix;
  std::int64_t width = 0;
  std::optional<std::int64_t> bridge;  // t / 2 for balanced words
  Validity validity = Validity::kFormal;

  bool AllPrefixesNonnegative() const;
};

WidthProfile Profile(const MorseWord& word);

std::int64_t Width(const MorseWord& word);

// Throws kNotBalanced unless the word has as many minima as maxima.
std::int64_t BridgeNumber(const MorseWord& word);

Validity Classify(const MorseWord& word);

// {"word", "prefix", "width", "bridge", "validity"}
nlohmann::json ToJson(const MorseWord& word, const WidthProfile& profile);

}  // namespace thinwidth

#endif  // THINWIDTH_MORSE_WORD_H_
