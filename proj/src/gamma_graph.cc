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
#include "thinwidth/gamma_graph.h"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <tuple>

#include "thinwidth/error.h"

namespace thinwidth {
namespace {

[[noreturn]] void ParseFailure(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

[[noreturn]] void NotACycle(const std::string& message) {
  throw Error(ErrorCode::kNotACycle, message);
}

}  // namespace

TubeSpec TubeSpec::Create(
    std::vector<double> critical_values, std::vector<TubeVertex> vertices,
    std::vector<std::pair<std::string, std::string>> edges) {
  TubeSpec spec;
  spec.critical_values_ = std::move(critical_values);
  spec.vertices_ = std::move(vertices);
  spec.edges_ = std::move(edges);

  const auto& cv = spec.critical_values_;
  for (std::size_t k = 1; k < cv.size(); ++k) {
    if (!(cv[k - 1] < cv[k])) {
      ParseFailure("critical_values must be strictly increasing");
    }
  }
  if (spec.vertices_.empty()) ParseFailure("spec has no vertices");
  const int top_slab = static_cast<int>(cv.size());
  for (const TubeVertex& v : spec.vertices_) {
    if (v.slab < 0 || v.slab > top_slab) {
      ParseFailure("vertex '" + v.id + "' has slab " + std::to_string(v.slab) +
                   " outside 0.." + std::to_string(top_slab));
    }
  }

  for (std::size_t k = 0; k < spec.vertices_.size(); ++k) {
    if (!spec.index_.emplace(spec.vertices_[k].id, k).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "vertex id '" + spec.vertices_[k].id + "' repeats");
    }
  }

  spec.adjacency_.assign(spec.vertices_.size(), {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : spec.edges_) {
    const auto ia = spec.IndexOf(a);
    const auto ib = spec.IndexOf(b);
    if (!ia || !ib) {
      ParseFailure("edge [" + a + ", " + b + "] names an unknown vertex");
    }
    const int gap = spec.vertices_[*ia].slab - spec.vertices_[*ib].slab;
    if (std::abs(gap) != 1) {
      throw Error(ErrorCode::kNonAdjacentEdge,
                  "edge [" + a + ", " + b + "] joins slabs " +
                      std::to_string(spec.vertices_[*ia].slab) + " and " +
                      std::to_string(spec.vertices_[*ib].slab));
    }
    if (!seen.emplace(std::min(*ia, *ib), std::max(*ia, *ib)).second) {
      ParseFailure("edge [" + a + ", " + b + "] repeats");
    }
    spec.adjacency_[*ia].push_back(*ib);
    spec.adjacency_[*ib].push_back(*ia);
  }
  for (auto& list : spec.adjacency_) std::sort(list.begin(), list.end());

  std::vector<bool> reached(spec.vertices_.size(), false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  reached[0] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    for (std::size_t u : spec.adjacency_[v]) {
      if (!reached[u]) {
        reached[u] = true;
        ++count;
        frontier.push(u);
      }
    }
  }
  if (count != spec.vertices_.size()) {
    throw Error(ErrorCode::kDisconnected,
                "graph has vertices unreachable from '" +
                    spec.vertices_[0].id + "'");
  }
  return spec;
}

TubeSpec TubeSpec::FromJson(const nlohmann::json& document) {
  if (!document.is_object()) ParseFailure("spec must be a JSON object");
  for (const char* key : {"critical_values", "vertices", "edges"}) {
    if (!document.contains(key) || !document[key].is_array()) {
      ParseFailure(std::string("spec needs an array \"") + key + "\"");
    }
  }

  std::vector<double> critical_values;
  for (const auto& value : document["critical_values"]) {
    if (!value.is_number()) ParseFailure("critical values must be numbers");
    critical_values.push_back(value.get<double>());
  }

  std::vector<TubeVertex> vertices;
  for (const auto& value : document["vertices"]) {
    if (!value.is_object() || !value.contains("id") ||
        !value["id"].is_string() || !value.contains("slab") ||
        !value["slab"].is_number_integer()) {
      ParseFailure("vertex must be {\"id\": string, \"slab\": int}: " +
                   value.dump());
    }
    vertices.push_back({value["id"].get<std::string>(), value["slab"].get<int>()});
  }

  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& value : document["edges"]) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_string() ||
        !value[1].is_string()) {
      ParseFailure("edge must be a pair of vertex ids: " + value.dump());
    }
    edges.emplace_back(value[0].get<std::string>(), value[1].get<std::string>());
  }
  return Create(std::move(critical_values), std::move(vertices),
                std::move(edges));
}

TubeSpec TubeSpec::Parse(std::string_view text) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    ParseFailure(e.what());
  }
  return FromJson(document);
}

std::optional<std::size_t> TubeSpec::IndexOf(std::string_view id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool TubeSpec::HasEdge(std::size_t a, std::size_t b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::int64_t TubeSpec::CycleRank() const {
  return static_cast<std::int64_t>(edges_.size()) -
         static_cast<std::int64_t>(vertices_.size()) + 1;
}

nlohmann::json TubeSpec::ToJson() const {
  nlohmann::json vertices = nlohmann::json::array();
  for (const TubeVertex& v : vertices_) {
    vertices.push_back({{"id", v.id}, {"slab", v.slab}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : edges_) edges.push_back({a, b});
  return {{"critical_values", critical_values_},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

std::string_view VertexClassName(VertexClass cls) {
  switch (cls) {
    case VertexClass::kMinimal: return "minimal";
    case VertexClass::kMaximal: return "maximal";
    case VertexClass::kVertical: return "vertical";
    case VertexClass::kIrrelevant: return "irrelevant";
  }
  return "irrelevant";
}

namespace {

// Indices of `loop`, after checking it is a simple cycle of `spec`.
std::vector<std::size_t> ResolveCycle(const TubeSpec& spec,
                                      const std::vector<std::string>& loop) {
  if (loop.size() < 3) {
    NotACycle("a cycle needs at least 3 vertices, got " +
              std::to_string(loop.size()));
  }
  std::vector<std::size_t> indices;
  std::set<std::size_t> distinct;
  for (const std::string& id : loop) {
    const auto index = spec.IndexOf(id);
    if (!index) NotACycle("'" + id + "' is not a vertex");
    if (!distinct.insert(*index).second) NotACycle("'" + id + "' repeats");
    indices.push_back(*index);
  }
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const std::size_t next = indices[(k + 1) % indices.size()];
    if (!spec.HasEdge(indices[k], next)) {
      NotACycle("no edge between '" + loop[k] + "' and '" +
                loop[(k + 1) % loop.size()] + "'");
    }
  }
  return indices;
}

// Slab of each cyclic neighbor differs by exactly one, so every loop vertex
// is a strict local extremum or lies on a monotone run.
VertexClass LoopVertexClass(int below, int here, int above) {
  if (below > here && above > here) return VertexClass::kMinimal;
  if (below < here && above < here) return VertexClass::kMaximal;
  return VertexClass::kVertical;
}

}  // namespace

std::map<std::string, VertexClass> Classify(
    const TubeSpec& spec, const std::vector<std::string>& loop) {
  const std::vector<std::size_t> cycle = ResolveCycle(spec, loop);
  std::map<std::string, VertexClass> labels;
  for (const TubeVertex& v : spec.vertices()) {
    labels[v.id] = VertexClass::kIrrelevant;
  }
  const std::size_t len = cycle.size();
  for (std::size_t k = 0; k < len; ++k) {
    const auto slab = [&](std::size_t at) {
      return spec.vertices()[cycle[at % len]].slab;
    };
    labels[loop[k]] = LoopVertexClass(slab(k + len - 1), slab(k), slab(k + 1));
  }
  return labels;
}

std::vector<LoopExtremum> SnapExtrema(const TubeSpec& spec,
                                      const std::vector<std::string>& loop,
                                      std::vector<std::string>* warnings) {
  const auto labels = Classify(spec, loop);
  std::vector<LoopExtremum> extrema;
  for (const std::string& id : loop) {
    const VertexClass cls = labels.at(id);
    if (cls != VertexClass::kMinimal && cls != VertexClass::kMaximal) continue;
    LoopExtremum e;
    e.id = id;
    e.slab = spec.vertices()[*spec.IndexOf(id)].slab;
    e.kind = cls == VertexClass::kMinimal ? Letter::kMin : Letter::kMax;
    e.critical_index = cls == VertexClass::kMinimal ? e.slab + 1 : e.slab;
    e.critical_value = spec.critical_values()[e.critical_index - 1];
    extrema.push_back(std::move(e));
  }
  std::sort(extrema.begin(), extrema.end(),
            [](const LoopExtremum& x, const LoopExtremum& y) {
              return std::tie(x.critical_index, x.id) <
                     std::tie(y.critical_index, y.id);
            });
  if (warnings != nullptr) {
    for (std::size_t k = 1; k < extrema.size(); ++k) {
      if (extrema[k - 1].critical_index == extrema[k].critical_index) {
        warnings->push_back("extrema '" + extrema[k - 1].id + "' and '" +
                            extrema[k].id + "' snap to the same critical level c" +
                            std::to_string(extrema[k].critical_index) +
                            "; ordered by id");
      }
    }
  }
  return extrema;
}

MorseWord LoopWord(const LoopAnalysis& analysis) {
  std::vector<Letter> letters;
  letters.reserve(analysis.extrema.size());
  for (const LoopExtremum& e : analysis.extrema) letters.push_back(e.kind);
  return MorseWord(std::move(letters));
}

LoopAnalysis FindUniqueLoop(const TubeSpec& spec) {
  const std::int64_t rank = spec.CycleRank();
  if (rank == 0) {
    throw Error(ErrorCode::kNoLoop,
                "graph is a tree (cycle rank 0); it cannot come from a "
                "knotted solid torus");
  }
  if (rank >= 2) {
    throw Error(ErrorCode::kMultipleLoops,
                "graph has cycle rank " + std::to_string(rank) +
                    "; a knotted solid torus has exactly one loop");
  }

  // Strip vertices of degree one until only the cycle is left.
  const std::size_t count = spec.vertices().size();
  std::vector<std::size_t> degree(count);
  std::vector<bool> removed(count, false);
  std::queue<std::size_t> leaves;
  for (std::size_t v = 0; v < count; ++v) {
    degree[v] = spec.Neighbors(v).size();
    if (degree[v] == 1) leaves.push(v);
  }
  while (!leaves.empty()) {
    const std::size_t v = leaves.front();
    leaves.pop();
    removed[v] = true;
    for (std::size_t u : spec.Neighbors(v)) {
      if (!removed[u] && --degree[u] == 1) leaves.push(u);
    }
  }

  const auto& vertices = spec.vertices();
  std::optional<std::size_t> start;
  for (std::size_t v = 0; v < count; ++v) {
    if (removed[v]) continue;
    if (!start || std::tie(vertices[v].slab, vertices[v].id) <
                      std::tie(vertices[*start].slab, vertices[*start].id)) {
      start = v;
    }
  }

  const auto cycle_neighbors = [&](std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t u : spec.Neighbors(v)) {
      if (!removed[u]) out.push_back(u);
    }
    return out;
  };

  LoopAnalysis analysis;
  analysis.cycle_rank = rank;
  std::vector<std::size_t> first = cycle_neighbors(*start);
  std::size_t previous = *start;
  std::size_t current = vertices[first[0]].id < vertices[first[1]].id
                            ? first[0]
                            : first[1];
  analysis.loop.push_back(vertices[*start].id);
  while (current != *start) {
    analysis.loop.push_back(vertices[current].id);
    const std::vector<std::size_t> next = cycle_neighbors(current);
    const std::size_t step = next[0] == previous ? next[1] : next[0];
    previous = current;
    current = step;
  }

  analysis.classification = Classify(spec, analysis.loop);
  analysis.extrema = SnapExtrema(spec, analysis.loop, &analysis.warnings);
  analysis.loop_word = LoopWord(analysis);
  return analysis;
}

nlohmann::json ToJson(const LoopAnalysis& analysis) {
  nlohmann::json classification = nlohmann::json::object();
  for (const auto& [id, cls] : analysis.classification) {
    classification[id] = std::string(VertexClassName(cls));
  }
  nlohmann::json extrema = nlohmann::json::array();
  for (const LoopExtremum& e : analysis.extrema) {
    extrema.push_back({{"id", e.id},
                       {"slab", e.slab},
                       {"kind", e.kind == Letter::kMin ? "min" : "max"},
                       {"critical_index", e.critical_index},
                       {"critical_value", e.critical_value}});
  }
  return {{"loop", analysis.loop},
          {"classification", std::move(classification)},
          {"extrema", std::move(extrema)},
          {"loop_word", analysis.loop_word.ToString()},
          {"cycle_rank", analysis.cycle_rank},
          {"warnings", analysis.warnings}};
}

}  // namespace thinwidth
