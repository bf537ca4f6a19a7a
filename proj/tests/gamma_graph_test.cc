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

#include <string>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "thinwidth/enumerate.h"
#include "thinwidth/error.h"

namespace thinwidth {
namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

template <typename Fn>
ErrorCode CodeOf(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParseError;
}

TubeSpec Diamond() {
  return TubeSpec::Create({1.0, 2.0},
                          {{"A", 0}, {"B", 1}, {"C", 1}, {"D", 2}},
                          {{"A", "B"}, {"A", "C"}, {"B", "D"}, {"C", "D"}});
}

// Cycle whose slabs read `slabs` in order, vertices "v0", "v1", ...
TubeSpec SlabCycle(const std::vector<int>& slabs, int critical_count) {
  std::vector<double> cv;
  for (int k = 1; k <= critical_count; ++k) cv.push_back(10.0 * k);
  std::vector<TubeVertex> vertices;
  Edges edges;
  for (std::size_t k = 0; k < slabs.size(); ++k) {
    vertices.push_back({"v" + std::to_string(k), slabs[k]});
    edges.emplace_back("v" + std::to_string(k),
                       "v" + std::to_string((k + 1) % slabs.size()));
  }
  return TubeSpec::Create(cv, vertices, edges);
}

TEST(LoadSpecTest, DiamondIsValid) {
  const TubeSpec spec = TubeSpec::Parse(R"({
    "critical_values": [1.0, 2.0],
    "vertices": [{"id":"A","slab":0},{"id":"B","slab":1},
                 {"id":"C","slab":1},{"id":"D","slab":2}],
    "edges": [["A","B"],["A","C"],["B","D"],["C","D"]]})");
  EXPECT_EQ(spec.vertices().size(), 4u);
  EXPECT_EQ(spec.CycleRank(), 1);
  EXPECT_EQ(TubeSpec::FromJson(spec.ToJson()).ToJson(), spec.ToJson());
}

TEST(LoadSpecTest, RejectsNonAdjacentEdge) {
  EXPECT_EQ(CodeOf([] {
              TubeSpec::Create({1, 2}, {{"A", 0}, {"B", 1}, {"D", 2}},
                               {{"A", "B"}, {"B", "D"}, {"A", "D"}});
            }),
            ErrorCode::kNonAdjacentEdge);
  try {
    TubeSpec::Create({1, 2}, {{"A", 0}, {"D", 2}}, {{"A", "D"}});
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("[A, D]"), std::string::npos);
  }
  EXPECT_EQ(CodeOf([] { TubeSpec::Create({1}, {{"A", 0}}, {{"A", "A"}}); }),
            ErrorCode::kNonAdjacentEdge);
}

TEST(LoadSpecTest, RejectsDisconnectedGraph) {
  EXPECT_EQ(CodeOf([] {
              TubeSpec::Create({1}, {{"A", 0}, {"B", 1}, {"C", 0}, {"D", 1}},
                               {{"A", "B"}, {"C", "D"}});
            }),
            ErrorCode::kDisconnected);
}

TEST(LoadSpecTest, RejectsDuplicateId) {
  EXPECT_EQ(CodeOf([] {
              TubeSpec::Create({1}, {{"A", 0}, {"A", 1}}, {{"A", "A"}});
            }),
            ErrorCode::kDuplicateId);
}

TEST(LoadSpecTest, RejectsMalformedDocuments) {
  for (const char* bad : {
           "not json",
           "[]",
           R"({"vertices":[],"edges":[]})",
           R"({"critical_values":[1],"vertices":[],"edges":[]})",
           R"({"critical_values":[2,1],"vertices":[{"id":"A","slab":0}],"edges":[]})",
           R"({"critical_values":[1],"vertices":[{"id":"A","slab":2}],"edges":[]})",
           R"({"critical_values":[1],"vertices":[{"id":"A","slab":-1}],"edges":[]})",
           R"({"critical_values":[1],"vertices":[{"id":"A"}],"edges":[]})",
           R"({"critical_values":[1],"vertices":[{"id":"A","slab":0}],"edges":[["A","Z"]]})",
           R"({"critical_values":[1],"vertices":[{"id":"A","slab":0},{"id":"B","slab":1}],"edges":[["A","B"],["B","A"]]})",
           R"({"critical_values":[1],"vertices":[{"id":"A","slab":0}],"edges":[["A"]]})",
       }) {
    EXPECT_EQ(CodeOf([&] { TubeSpec::Parse(bad); }), ErrorCode::kParseError)
        << bad;
  }
}

TEST(FindUniqueLoopTest, Diamond) {
  const LoopAnalysis analysis = FindUniqueLoop(Diamond());
  EXPECT_EQ(analysis.loop, (std::vector<std::string>{"A", "B", "D", "C"}));
  EXPECT_EQ(analysis.classification.at("A"), VertexClass::kMinimal);
  EXPECT_EQ(analysis.classification.at("B"), VertexClass::kVertical);
  EXPECT_EQ(analysis.classification.at("C"), VertexClass::kVertical);
  EXPECT_EQ(analysis.classification.at("D"), VertexClass::kMaximal);
  EXPECT_EQ(analysis.loop_word, MorseWord::Parse("ab"));
  EXPECT_EQ(analysis.cycle_rank, 1);
  EXPECT_TRUE(analysis.warnings.empty());
  ASSERT_EQ(analysis.extrema.size(), 2u);
  EXPECT_EQ(analysis.extrema[0].critical_index, 1);
  EXPECT_EQ(analysis.extrema[1].critical_index, 2);
}

TEST(FindUniqueLoopTest, TreeHasNoLoop) {
  const TubeSpec path = TubeSpec::Create(
      {1, 2}, {{"A", 0}, {"B", 1}, {"C", 2}}, {{"A", "B"}, {"B", "C"}});
  EXPECT_EQ(CodeOf([&] { FindUniqueLoop(path); }), ErrorCode::kNoLoop);
  const TubeSpec single = TubeSpec::Create({}, {{"A", 0}}, {});
  EXPECT_EQ(CodeOf([&] { FindUniqueLoop(single); }), ErrorCode::kNoLoop);
}

TEST(FindUniqueLoopTest, TwoLoopsAreRejected) {
  const TubeSpec spec = TubeSpec::Create(
      {1, 2}, {{"A", 0}, {"B", 1}, {"C", 1}, {"D", 2}, {"D'", 2}},
      {{"A", "B"}, {"A", "C"}, {"B", "D"}, {"C", "D"}, {"B", "D'"},
       {"C", "D'"}});
  EXPECT_EQ(spec.CycleRank(), 2);
  EXPECT_EQ(CodeOf([&] { FindUniqueLoop(spec); }), ErrorCode::kMultipleLoops);
}

TEST(FindUniqueLoopTest, IgnoresTreesHangingOffTheLoop) {
  const TubeSpec spec = TubeSpec::Create(
      {1, 2, 3},
      {{"A", 0}, {"B", 1}, {"C", 1}, {"D", 2}, {"E", 2}, {"F", 3}, {"G", 0}},
      {{"A", "B"}, {"A", "C"}, {"B", "D"}, {"C", "D"}, {"B", "E"},
       {"E", "F"}, {"G", "C"}});
  const LoopAnalysis analysis = FindUniqueLoop(spec);
  EXPECT_EQ(analysis.loop, (std::vector<std::string>{"A", "B", "D", "C"}));
  for (const char* id : {"E", "F", "G"}) {
    EXPECT_EQ(analysis.classification.at(id), VertexClass::kIrrelevant) << id;
  }
}

TEST(ClassifyTest, Diamond) {
  const auto labels = Classify(Diamond(), {"A", "B", "D", "C"});
  EXPECT_EQ(labels.at("A"), VertexClass::kMinimal);
  EXPECT_EQ(labels.at("B"), VertexClass::kVertical);
  EXPECT_EQ(labels.at("C"), VertexClass::kVertical);
  EXPECT_EQ(labels.at("D"), VertexClass::kMaximal);
  // Orientation and starting point do not matter.
  EXPECT_EQ(Classify(Diamond(), {"D", "B", "A", "C"}), labels);
}

TEST(ClassifyTest, PendantIsIrrelevant) {
  // A pendant must sit in a slab adjacent to B's, so E lives in slab 2.
  const TubeSpec spec = TubeSpec::Create(
      {1, 2}, {{"A", 0}, {"B", 1}, {"C", 1}, {"D", 2}, {"E", 2}},
      {{"A", "B"}, {"A", "C"}, {"B", "D"}, {"C", "D"}, {"B", "E"}});
  const auto labels = Classify(spec, {"A", "B", "D", "C"});
  EXPECT_EQ(labels.at("E"), VertexClass::kIrrelevant);
  EXPECT_EQ(labels.at("A"), VertexClass::kMinimal);
  EXPECT_EQ(labels.at("D"), VertexClass::kMaximal);
  EXPECT_EQ(labels.at("B"), VertexClass::kVertical);
}

TEST(ClassifyTest, RejectsNonCycles) {
  const TubeSpec spec = Diamond();
  EXPECT_EQ(CodeOf([&] { Classify(spec, {"A", "B"}); }), ErrorCode::kNotACycle);
  EXPECT_EQ(CodeOf([&] { Classify(spec, {"A", "B", "C", "D"}); }),
            ErrorCode::kNotACycle);
  EXPECT_EQ(CodeOf([&] { Classify(spec, {"A", "B", "D", "B"}); }),
            ErrorCode::kNotACycle);
  EXPECT_EQ(CodeOf([&] { Classify(spec, {"A", "B", "D", "Z"}); }),
            ErrorCode::kNotACycle);
}

TEST(LoopWordTest, TiedExtremaAreOrderedById) {
  const LoopAnalysis analysis =
      FindUniqueLoop(SlabCycle({0, 1, 2, 1, 0, 1, 2, 1}, 2));
  EXPECT_EQ(analysis.loop_word, MorseWord::Parse("aabb"));
  EXPECT_EQ(analysis.warnings.size(), 2u);
  ASSERT_EQ(analysis.extrema.size(), 4u);
  EXPECT_EQ(analysis.extrema[0].id, "v0");
  EXPECT_EQ(analysis.extrema[1].id, "v4");
  EXPECT_EQ(LoopWord(analysis), analysis.loop_word);
}

TEST(LoopWordTest, DistinctLevelsFollowSlabOrder) {
  const LoopAnalysis analysis =
      FindUniqueLoop(SlabCycle({0, 1, 2, 3, 4, 3, 2, 1, 2, 3, 2, 1}, 4));
  EXPECT_TRUE(analysis.warnings.empty());
  std::vector<int> levels;
  for (const LoopExtremum& e : analysis.extrema) levels.push_back(e.critical_index);
  EXPECT_EQ(levels, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(analysis.loop_word, MorseWord::Parse("aabb"));
  EXPECT_EQ(analysis.extrema[1].critical_value, 20.0);
}

TEST(LoopWordTest, CanonicalOrientation) {
  // Two lowest vertices; start at the smaller id and head to the smaller
  // neighbor.
  const TubeSpec spec = TubeSpec::Create(
      {1}, {{"q", 0}, {"p", 0}, {"y", 1}, {"x", 1}},
      {{"q", "y"}, {"q", "x"}, {"p", "y"}, {"p", "x"}});
  EXPECT_EQ(FindUniqueLoop(spec).loop,
            (std::vector<std::string>{"p", "x", "q", "y"}));
}

TEST(AnalysisJsonTest, Shape) {
  const auto doc = ToJson(FindUniqueLoop(Diamond()));
  EXPECT_EQ(doc["loop"], nlohmann::json({"A", "B", "D", "C"}));
  EXPECT_EQ(doc["classification"]["D"], "maximal");
  EXPECT_EQ(doc["loop_word"], "ab");
  EXPECT_EQ(doc["cycle_rank"], 1);
  EXPECT_EQ(doc["extrema"][0]["critical_value"], 1.0);
}

// Every connected slab graph on <= 6 vertices against the edge-subset
// cycle oracle.
TEST(GraphPropertyTest, UniqueLoopIffCycleRankOne) {
  std::size_t graphs = 0;
  ForEachSlabGraph(6, [&](const TubeSpec& spec) {
    ++graphs;
    std::vector<oracle::Edge> edges;
    for (const auto& [a, b] : spec.edges()) {
      edges.emplace_back(static_cast<int>(*spec.IndexOf(a)),
                         static_cast<int>(*spec.IndexOf(b)));
    }
    const auto cycles = oracle::CyclesByEdgeSubsets(
        static_cast<int>(spec.vertices().size()), edges);
    const auto rank = static_cast<std::int64_t>(edges.size()) -
                      static_cast<std::int64_t>(spec.vertices().size()) + 1;
    ASSERT_EQ(spec.CycleRank(), rank);
    ASSERT_EQ(AllSimpleCycles(spec).size(), cycles.size());
    if (rank != 1) {
      ASSERT_NE(cycles.size(), 1u);
      ASSERT_THROW(FindUniqueLoop(spec), Error);
      return;
    }
    ASSERT_EQ(cycles.size(), 1u);
    const LoopAnalysis analysis = FindUniqueLoop(spec);
    std::set<oracle::Edge> found;
    for (std::size_t k = 0; k < analysis.loop.size(); ++k) {
      const int a = static_cast<int>(*spec.IndexOf(analysis.loop[k]));
      const int b = static_cast<int>(
          *spec.IndexOf(analysis.loop[(k + 1) % analysis.loop.size()]));
      found.emplace(std::min(a, b), std::max(a, b));
    }
    ASSERT_EQ(found, cycles.front());
    ASSERT_GE(Classify(analysis.loop_word), Validity::kBalanced);
    ASSERT_EQ(analysis.loop.size() % 2, 0u);
  });
  EXPECT_GT(graphs, 1000u);
}

}  // namespace
}  // namespace thinwidth
