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
#include "thinwidth/satellite.h"

#include <string>

#include "checked.h"
#include "thinwidth/error.h"

namespace thinwidth {
namespace {

void RequireWinding(std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorCode::kBadWinding,
                "winding number must be >= 1, got " + std::to_string(n));
  }
}

void RequireBalanced(const MorseWord& word, const char* role) {
  if (word.CountMin() * 2 != word.size()) {
    throw Error(ErrorCode::kNotBalanced,
                std::string(role) + " word '" + word.ToString() +
                    "' is not balanced");
  }
}

}  // namespace

MorseWord Blowup(const MorseWord& word, std::int64_t n) {
  RequireWinding(n);
  const auto copies = static_cast<std::size_t>(n);
  if (!word.empty() && copies > kMaxWordLength / word.size()) {
    throw Error(ErrorCode::kOverflow,
                "blowup by " + std::to_string(n) + " of a word of length " +
                    std::to_string(word.size()) + " is too long");
  }
  std::vector<Letter> out;
  out.reserve(copies * word.size());
  for (Letter letter : word.letters()) out.insert(out.end(), copies, letter);
  return MorseWord(std::move(out));
}

BoundReport LowerBound(const MorseWord& loop_word, std::int64_t n) {
  RequireWinding(n);
  RequireBalanced(loop_word, "loop");
  using internal::CheckedAdd;
  using internal::CheckedMul;

  const WidthProfile profile = Profile(loop_word);
  const std::int64_t n_squared = CheckedMul(n, n);
  const std::int64_t shift = CheckedMul(n, n - 1);

  BoundReport report;
  report.n = n;
  report.loop_word = loop_word;
  report.terms.reserve(loop_word.size());
  for (std::size_t k = 1; k <= loop_word.size(); ++k) {
    BoundTerm term;
    term.index = k;
    term.kind = loop_word.At(k);
    term.omega = profile.prefix[k - 1];
    const std::int64_t scaled = CheckedMul(n_squared, term.omega);
    term.contribution = term.kind == Letter::kMin
                            ? CheckedAdd(scaled, shift)
                            : internal::CheckedSub(scaled, shift);
    report.total = CheckedAdd(report.total, term.contribution);
    report.terms.push_back(term);
  }
  report.identity_holds =
      report.total == CheckedMul(n_squared, profile.width);
  return report;
}

std::int64_t TheoremGap(const MorseWord& satellite_word,
                        const MorseWord& loop_word, std::int64_t n) {
  RequireWinding(n);
  RequireBalanced(satellite_word, "satellite");
  RequireBalanced(loop_word, "loop");
  const std::int64_t bound =
      internal::CheckedMul(internal::CheckedMul(n, n), Width(loop_word));
  return internal::CheckedSub(Width(satellite_word), bound);
}

nlohmann::json ToJson(const BoundReport& report) {
  nlohmann::json terms = nlohmann::json::array();
  for (const BoundTerm& term : report.terms) {
    terms.push_back({{"index", term.index},
                     {"kind", term.kind == Letter::kMin ? "min" : "max"},
                     {"omega", term.omega},
                     {"contribution", term.contribution}});
  }
  return {{"n", report.n},
          {"loop_word", report.loop_word.ToString()},
          {"terms", std::move(terms)},
          {"total", report.total},
          {"identity_holds", report.identity_holds}};
}

}  // namespace thinwidth
