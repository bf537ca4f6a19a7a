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
// Leveled graph of a knotted solid torus.
//
// Removing the level sets through the critical values c_1 < ... < c_q of the
// boundary torus cuts the solid torus into product pieces. Each piece is a
// vertex living in one slab (slab s lies between c_s and c_{s+1}; slab 0 is
// below c_1 and slab q above c_q), and pieces separated by a component of a
// critical level are joined by an edge. Such edges only join adjacent slabs.
//
// For a knotted torus the graph has exactly one cycle. The analysis here
// extracts it, labels every vertex relative to it, and reads off the Morse
// word of the loop after each extremum is pushed onto the nearest critical
// level bounding its piece.

#ifndef THINWIDTH_GAMMA_GRAPH_H_
#define THINWIDTH_GAMMA_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "thinwidth/morse_word.h"

namespace thinwidth {

struct TubeVertex {
  std::string id;
  int slab = 0;
};

class TubeSpec {
 public:
  // Validates, in order: structure (kParseError), unique ids (kDuplicateId),
  // edges between adjacent slabs (kNonAdjacentEdge), connectivity
  // (kDisconnected).
  static TubeSpec Create(std::vector<double> critical_values,
                         std::vector<TubeVertex> vertices,
                         std::vector<std::pair<std::string, std::string>> edges);

  // {"critical_values":[..], "vertices":[{"id":..,"slab":..}], "edges":[[a,b]]}
  static TubeSpec FromJson(const nlohmann::json& document);
  static TubeSpec Parse(std::string_view text);

  const std::vector<double>& critical_values() const {
    return critical_values_;
  }
  const std::vector<TubeVertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const {
    return edges_;
  }

  std::optional<std::size_t> IndexOf(std::string_view id) const;
  // Neighbor indices, ascending.
  const std::vector<std::size_t>& Neighbors(std::size_t index) const {
    return adjacency_[index];
  }
  bool HasEdge(std::size_t a, std::size_t b) const;

  // E - V + 1; the graph is connected by construction.
  std::int64_t CycleRank() const;

  nlohmann::json ToJson() const;

 private:
  TubeSpec() = default;

  std::vector<double> critical_values_;
  std::vector<TubeVertex> vertices_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

enum class VertexClass { kMinimal, kMaximal, kVertical, kIrrelevant };

std::string_view VertexClassName(VertexClass cls);  // "minimal", ...

// A loop extremum after snapping: a minimum in slab s moves up to c_{s+1},
// a maximum in slab s moves down to c_s.
struct LoopExtremum {
  std::string id;
  int slab = 0;
  Letter kind = Letter::kMin;
  int critical_index = 0;  // 1-indexed into critical_values
  double critical_value = 0.0;
};

struct LoopAnalysis {
  std::vector<std::string> loop;  // cyclic, canonical orientation
  std::map<std::string, VertexClass> classification;
  std::vector<LoopExtremum> extrema;  // in snapped height order
  MorseWord loop_word;
  std::int64_t cycle_rank = 0;
  std::vector<std::string> warnings;
};

// Throws kNoLoop when the graph is a tree and kMultipleLoops when its cycle
// rank is 2 or more. The loop starts at the lowest-slab loop vertex with the
// smallest id and leaves toward its smaller-id loop neighbor.
LoopAnalysis FindUniqueLoop(const TubeSpec& spec);

// Labels every vertex of `spec` relative to `loop` (a cyclic id sequence).
// Throws kNotACycle unless `loop` is a simple cycle of length >= 3 in spec.
std::map<std::string, VertexClass> Classify(const TubeSpec& spec,
                                            const std::vector<std::string>& loop);

// Loop extrema sorted by the critical level they snap to. Extrema snapping
// to the same critical level are ordered by id and reported in `warnings`.
std::vector<LoopExtremum> SnapExtrema(const TubeSpec& spec,
                                      const std::vector<std::string>& loop,
                                      std::vector<std::string>* warnings);

MorseWord LoopWord(const LoopAnalysis& analysis);

nlohmann::json ToJson(const LoopAnalysis& analysis);

}  // namespace thinwidth

#endif  // THINWIDTH_GAMMA_GRAPH_H_
