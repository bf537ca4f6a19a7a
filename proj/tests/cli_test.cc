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
#include "thinwidth/cli.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace thinwidth::cli {
namespace {

using nlohmann::json;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation Invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string GoldenPath(const std::string& name) {
  return std::string(THINWIDTH_GOLDEN_DIR) + "/" + name;
}

std::string Golden(const std::string& name) {
  std::ifstream in(GoldenPath(name));
  EXPECT_TRUE(in) << name;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct GoldenCase {
  std::vector<std::string> args;
  const char* file;
  int code;
};

TEST(CliGoldenTest, TextOutputIsPinned) {
  const std::vector<GoldenCase> cases = {
      {{"width", "aabb"}, "width_aabb.txt", kExitOk},
      {{"width", ""}, "width_empty.txt", kExitOk},
      {{"blowup", "aabb", "-n", "2"}, "blowup_aabb_n2.txt", kExitOk},
      {{"bound", "aabb", "-n", "3"}, "bound_aabb_n3.txt", kExitOk},
      {{"gap", "aaaabbbb", "ab", "-n", "2"}, "gap.txt", kExitOk},
      {{"op", "aabb", "--ops", GoldenPath("chain_ops.json")}, "op_chain.txt",
       kExitOk},
      {{"graph", "loop", GoldenPath("diamond.json")}, "graph_loop_diamond.txt",
       kExitOk},
      {{"table", "-B", "4"}, "table_b4.txt", kExitOk},
      {{"enum", "-b", "3"}, "enum_b3.txt", kExitOk},
      {{"validate", "abab"}, "validate_abab.txt", kExitFail},
  };
  for (const GoldenCase& c : cases) {
    const Invocation run = Invoke(c.args);
    EXPECT_EQ(run.code, c.code) << c.file << "\n" << run.err;
    EXPECT_EQ(run.out, Golden(c.file)) << c.file;
  }
}

TEST(CliTest, ValidateKnotWord) {
  const Invocation run = Invoke({"validate", "aabb"});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_EQ(run.out, "validity=knot\n");
}

TEST(CliTest, BlowupOfUnbalancedWordReportsMismatch) {
  const Invocation run = Invoke({"blowup", "aab", "-n", "2"});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_EQ(run.out, "aaaabb (width 30 != 2^2 * 8)\n");
}

TEST(CliTest, UsageErrors) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"width"},
           {"blowup", "ab"},
           {"blowup", "ab", "-n", "two"},
           {"graph"},
           {"width", "aabb", "--jobs", "0"},
       }) {
    const Invocation run = Invoke(args);
    EXPECT_EQ(run.code, kExitUsage) << (args.empty() ? "" : args[0]);
    EXPECT_TRUE(run.out.empty() || run.out.find("Usage") != std::string::npos);
  }
}

TEST(CliTest, InputErrorsGoToStderr) {
  Invocation run = Invoke({"width", "axb"});
  EXPECT_EQ(run.code, kExitUsage);
  EXPECT_TRUE(run.out.empty());
  EXPECT_NE(run.err.find("INVALID_CHARACTER"), std::string::npos);

  run = Invoke({"blowup", "ab", "-n", "0"});
  EXPECT_EQ(run.code, kExitUsage);
  EXPECT_NE(run.err.find("BAD_WINDING"), std::string::npos);

  run = Invoke({"bound", "aab", "-n", "2"});
  EXPECT_NE(run.err.find("NOT_BALANCED"), std::string::npos);

  run = Invoke({"op", "aabb", "--ops", GoldenPath("bad_ops.json")});
  EXPECT_EQ(run.code, kExitUsage);
  EXPECT_NE(run.err.find("BAD_LETTER"), std::string::npos);
  EXPECT_NE(run.err.find("(step 1)"), std::string::npos);

  run = Invoke({"graph", "loop", GoldenPath("missing.json")});
  EXPECT_EQ(run.code, kExitUsage);

  run = Invoke({"verify", "lemma46"});
  EXPECT_EQ(run.code, kExitUsage);
  EXPECT_NE(run.err.find("UNKNOWN_SUITE"), std::string::npos);
}

TEST(CliTest, GraphWithoutSingleLoopFails) {
  const Invocation run = Invoke({"graph", "loop", GoldenPath("tree.json")});
  EXPECT_EQ(run.code, kExitFail);
  EXPECT_NE(run.err.find("NO_LOOP"), std::string::npos);
}

TEST(CliTest, VerifySuites) {
  Invocation run = Invoke({"verify", "lemma45", "--max-len", "6"});
  EXPECT_EQ(run.code, kExitOk);
  EXPECT_EQ(run.out.rfind("LEMMA45 pass (", 0), 0u);
  run = Invoke({"verify", "graph", "--max-len", "4", "--jobs", "2"});
  EXPECT_EQ(run.code, kExitOk);
  run = Invoke({"--json", "verify", "bound", "--max-n", "2"});
  const json doc = json::parse(run.out);
  EXPECT_EQ(doc["suite"], "BOUND");
  EXPECT_EQ(doc["passed"], true);
  EXPECT_TRUE(doc["counterexample"].is_null());
}

TEST(CliTest, MaxBridgeEnvironmentOverride) {
  ASSERT_EQ(setenv("THINWIDTH_MAX_BRIDGE", "3", 1), 0);
  EXPECT_EQ(Invoke({"enum", "-b", "4"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"enum", "-b", "3"}).code, kExitOk);
  ASSERT_EQ(setenv("THINWIDTH_MAX_BRIDGE", "x", 1), 0);
  EXPECT_EQ(Invoke({"enum", "-b", "1"}).code, kExitUsage);
  ASSERT_EQ(unsetenv("THINWIDTH_MAX_BRIDGE"), 0);
  EXPECT_EQ(Invoke({"enum", "-b", "4"}).code, kExitOk);
}

// Each JSON document parses and carries the documented fields.
TEST(CliJsonTest, DocumentsFollowSchemas) {
  json doc = json::parse(Invoke({"width", "aabb", "--json"}).out);
  EXPECT_EQ(doc, json::parse(R"({"word":"aabb","prefix":[2,4,2,0],"width":8,
                                 "bridge":2,"validity":"knot"})"));
  doc = json::parse(Invoke({"--json", "width", "aab"}).out);
  EXPECT_TRUE(doc["bridge"].is_null());
  EXPECT_EQ(doc["validity"], "formal");

  doc = json::parse(Invoke({"bound", "ab", "-n", "2", "--json"}).out);
  EXPECT_EQ(doc["total"], 8);
  EXPECT_EQ(doc["terms"][0]["contribution"], 10);
  EXPECT_EQ(doc["terms"][1]["kind"], "max");

  doc = json::parse(Invoke({"blowup", "aabb", "-n", "2", "--json"}).out);
  EXPECT_EQ(doc["result"], "aaaabbbb");
  EXPECT_EQ(doc["width"], 32);
  EXPECT_EQ(doc["identity_holds"], true);

  doc = json::parse(Invoke({"gap", "aaaabbbb", "aabb", "-n", "2", "--json"}).out);
  EXPECT_EQ(doc["gap"], 0);

  doc = json::parse(
      Invoke({"op", "aabb", "--ops", GoldenPath("chain_ops.json"), "--json"}).out);
  EXPECT_EQ(doc["result"], "ab");
  ASSERT_EQ(doc["trace"].size(), 2u);
  EXPECT_EQ(doc["trace"][0]["width"], 4);
  EXPECT_EQ(doc["trace"][0]["step"], json::parse(R"({"kind":"type2","i":2})"));

  doc = json::parse(
      Invoke({"graph", "loop", GoldenPath("diamond.json"), "--json"}).out);
  EXPECT_EQ(doc["loop"], json({"A", "B", "D", "C"}));
  EXPECT_EQ(doc["classification"]["E"], "irrelevant");
  EXPECT_EQ(doc["extrema"][1]["critical_value"], 2.5);

  doc = json::parse(Invoke({"table", "-B", "3", "--json"}).out);
  EXPECT_EQ(doc.size(), 3u);
  EXPECT_EQ(doc[2]["witness"], "aababb");

  doc = json::parse(Invoke({"enum", "-b", "3", "--json"}).out);
  EXPECT_EQ(doc["count"], 2);
  EXPECT_EQ(doc["words"], json({"aaabbb", "aababb"}));
}

}  // namespace
}  // namespace thinwidth::cli
