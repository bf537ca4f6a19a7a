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
// Exhaustive enumeration of knot words and the property suites that check
// the word calculus, the blowup identity, the bound accounting and the
// unique-loop analysis over every instance up to a size limit.

#ifndef THINWIDTH_ENUMERATE_H_
#define THINWIDTH_ENUMERATE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "thinwidth/gamma_graph.h"
#include "thinwidth/morse_word.h"

namespace thinwidth {

inline constexpr int kDefaultMaxBridge = 14;

struct EnumerationOptions {
  int max_bridge = kDefaultMaxBridge;
  unsigned jobs = 1;  // worker threads; output order never depends on it
};

struct EnumerationResult {
  int bridge = 0;
  std::vector<MorseWord> words;  // lexicographic, 'a' < 'b'
  std::size_t count = 0;
  std::int64_t min_width = 0;
  std::vector<MorseWord> witnesses;  // words attaining min_width
};

// All knot words with `bridge` minima. Throws kLimitExceeded unless
// 1 <= bridge <= options.max_bridge.
EnumerationResult EnumerateKnotWords(int bridge,
                                     const EnumerationOptions& options = {});

struct TableRow {
  int bridge = 0;
  std::size_t count = 0;
  std::int64_t min_width = 0;
  MorseWord witness;  // lexicographically first minimum-width word
};

std::vector<TableRow> MinWidthTable(int max_bridge,
                                    const EnumerationOptions& options = {});

nlohmann::json ToJson(const EnumerationResult& result);
nlohmann::json ToJson(const std::vector<TableRow>& table);

enum class Suite { kLemma45, kBlowup, kBound, kGraph };

std::string_view SuiteName(Suite suite);  // "LEMMA45", ...
// Case-insensitive. Throws kUnknownSuite.
Suite ParseSuite(std::string_view name);

inline constexpr std::size_t kMaxSuiteWordLength = 16;
inline constexpr std::int64_t kMaxSuiteWinding = 10;
inline constexpr std::size_t kMaxSuiteVertices = 8;

struct SuiteLimits {
  // Word length for the word suites, vertex count for kGraph.
  std::size_t max_len = 8;
  std::int64_t max_n = 3;
  unsigned jobs = 1;
};

struct SuiteReport {
  Suite suite = Suite::kLemma45;
  bool passed = true;
  std::uint64_t instances = 0;  // checks performed; exact for passing runs
  // First failing instance in (length, lexicographic) order.
  std::optional<std::string> counterexample;
};

// Throws kLimitExceeded when the limits exceed the kMaxSuite* constants.
SuiteReport RunPropertySuite(Suite suite, const SuiteLimits& limits);

// Every connected slab graph with at most `max_vertices` vertices whose
// edges join adjacent slabs. Vertices are numbered in slab order with ids
// "v0", "v1", ...; slabs are 0..k for some k, with critical values 1..k.
// Isomorphic copies are not removed.
void ForEachSlabGraph(std::size_t max_vertices,
                      const std::function<void(const TubeSpec&)>& visit);

// Every simple cycle of `spec` found by depth-first path extension, each as
// a vertex-index sequence starting at its smallest index.
std::vector<std::vector<std::size_t>> AllSimpleCycles(const TubeSpec& spec);

}  // namespace thinwidth

#endif  // THINWIDTH_ENUMERATE_H_
