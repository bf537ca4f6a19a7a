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

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "thinwidth/enumerate.h"
#include "thinwidth/error.h"
#include "thinwidth/gamma_graph.h"
#include "thinwidth/morse_word.h"
#include "thinwidth/satellite.h"
#include "thinwidth/word_ops.h"

namespace thinwidth::cli {
namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  unsigned jobs = 1;
  std::string word;
  std::string second_word;
  std::string path;
  std::string suite;
  std::int64_t n = 1;
  int bridge = 1;
  std::size_t max_len = 0;  // 0: suite default
  std::int64_t max_n = 3;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int MaxBridge() {
  const char* value = std::getenv("THINWIDTH_MAX_BRIDGE");
  if (value == nullptr || *value == '\0') return kDefaultMaxBridge;
  int parsed = 0;
  const char* end = value + std::char_traits<char>::length(value);
  const auto [ptr, ec] = std::from_chars(value, end, parsed);
  if (ec != std::errc() || ptr != end || parsed < 1) {
    throw UsageError("THINWIDTH_MAX_BRIDGE must be a positive integer, got '" +
                     std::string(value) + "'");
  }
  return parsed;
}

std::string BridgeText(const WidthProfile& profile) {
  return profile.bridge ? std::to_string(*profile.bridge) : "none";
}

// Why a word is not a knot word, or empty when it is one.
std::string KnotViolation(const MorseWord& word, const WidthProfile& profile) {
  const std::size_t t = word.size();
  if (t == 0) return "empty word";
  if (profile.prefix.back() != 0) {
    return "final prefix " + std::to_string(profile.prefix.back()) + " != 0";
  }
  for (std::size_t k = 0; k + 1 < t; ++k) {
    if (profile.prefix[k] < 2) {
      return "prefix[" + std::to_string(k + 1) + "] = " +
             std::to_string(profile.prefix[k]) + " < 2";
    }
  }
  return {};
}

int RunWidth(const Options& opt, std::ostream& out) {
  const MorseWord word = MorseWord::Parse(opt.word);
  const WidthProfile profile = Profile(word);
  if (opt.json) {
    out << ToJson(word, profile).dump() << '\n';
  } else {
    out << "width=" << profile.width << " bridge=" << BridgeText(profile)
        << " validity=" << ValidityName(profile.validity) << '\n';
  }
  return kExitOk;
}

int RunValidate(const Options& opt, std::ostream& out) {
  const MorseWord word = MorseWord::Parse(opt.word);
  const WidthProfile profile = Profile(word);
  const std::string violation = KnotViolation(word, profile);
  if (opt.json) {
    json doc = ToJson(word, profile);
    doc["knot"] = violation.empty();
    doc["reason"] = violation.empty() ? json(nullptr) : json(violation);
    out << doc.dump() << '\n';
  } else {
    out << "validity=" << ValidityName(profile.validity);
    if (!violation.empty()) out << " (not a knot word: " << violation << ")";
    out << '\n';
  }
  return violation.empty() ? kExitOk : kExitFail;
}

int RunBlowup(const Options& opt, std::ostream& out) {
  const MorseWord word = MorseWord::Parse(opt.word);
  const MorseWord blown = Blowup(word, opt.n);
  const std::int64_t width = Width(word);
  const std::int64_t blown_width = Width(blown);
  const bool identity = blown_width == opt.n * opt.n * width;
  if (opt.json) {
    out << json{{"word", word.ToString()},
                {"n", opt.n},
                {"result", blown.ToString()},
                {"width", blown_width},
                {"base_width", width},
                {"identity_holds", identity}}
               .dump()
        << '\n';
  } else {
    out << blown.ToString() << " (width " << blown_width
        << (identity ? " = " : " != ") << opt.n << "^2 * " << width << ")\n";
  }
  return kExitOk;
}

int RunOp(const Options& opt, std::ostream& out) {
  const MorseWord word = MorseWord::Parse(opt.word);
  json document;
  try {
    document = json::parse(ReadFile(opt.path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  const std::vector<OpStep> steps = OpStepsFromJson(document);
  const SequenceResult result = ApplySequence(word, steps);

  if (opt.json) {
    json trace = json::array();
    for (std::size_t s = 0; s < steps.size(); ++s) {
      trace.push_back({{"step", ToJson(steps[s])},
                       {"width", result.widths[s]},
                       {"validity", ValidityName(result.validities[s])}});
    }
    out << json{{"word", word.ToString()},
                {"width", Width(word)},
                {"result", result.word.ToString()},
                {"trace", std::move(trace)}}
               .dump()
        << '\n';
    return kExitOk;
  }
  out << "start " << word.ToString() << " width=" << Width(word) << '\n';
  MorseWord current = word;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    current = Apply(current, steps[s]);
    out << s + 1 << ' ' << steps[s].ToString() << " -> "
        << (current.empty() ? "(empty)" : current.ToString())
        << " width=" << result.widths[s]
        << " validity=" << ValidityName(result.validities[s]) << '\n';
  }
  out << "result " << (result.word.empty() ? "(empty)" : result.word.ToString())
      << '\n';
  return kExitOk;
}

int RunGap(const Options& opt, std::ostream& out) {
  const MorseWord satellite = MorseWord::Parse(opt.word);
  const MorseWord loop = MorseWord::Parse(opt.second_word);
  const std::int64_t gap = TheoremGap(satellite, loop, opt.n);
  if (opt.json) {
    out << json{{"satellite_word", satellite.ToString()},
                {"loop_word", loop.ToString()},
                {"n", opt.n},
                {"satellite_width", Width(satellite)},
                {"loop_width", Width(loop)},
                {"gap", gap}}
               .dump()
        << '\n';
  } else {
    out << "gap=" << gap << " (" << Width(satellite) << " - " << opt.n
        << "^2 * " << Width(loop) << ")\n";
  }
  return kExitOk;
}

int RunBound(const Options& opt, std::ostream& out) {
  const BoundReport report = LowerBound(MorseWord::Parse(opt.word), opt.n);
  if (opt.json) {
    out << ToJson(report).dump() << '\n';
    return kExitOk;
  }
  for (const BoundTerm& term : report.terms) {
    out << (term.kind == Letter::kMin ? "min" : "max") << '@' << term.index
        << " omega=" << term.omega << " contribution=" << term.contribution
        << '\n';
  }
  out << "total=" << report.total << ' '
      << (report.identity_holds ? "=" : "!=") << ' ' << report.n << "^2 * "
      << Width(report.loop_word) << '\n';
  return kExitOk;
}

int RunGraphLoop(const Options& opt, std::ostream& out, std::ostream& err) {
  const TubeSpec spec = TubeSpec::Parse(ReadFile(opt.path));
  LoopAnalysis analysis;
  try {
    analysis = FindUniqueLoop(spec);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoLoop && e.code() != ErrorCode::kMultipleLoops) {
      throw;
    }
    err << "thinwidth: " << e.what() << '\n';
    if (opt.json) {
      out << json{{"error", ErrorCodeName(e.code())},
                  {"cycle_rank", spec.CycleRank()}}
                 .dump()
          << '\n';
    }
    return kExitFail;
  }
  for (const std::string& warning : analysis.warnings) {
    err << "thinwidth: warning: " << warning << '\n';
  }
  if (opt.json) {
    out << ToJson(analysis).dump() << '\n';
    return kExitOk;
  }
  out << "loop:";
  for (const std::string& id : analysis.loop) out << ' ' << id;
  out << "\ncycle_rank=" << analysis.cycle_rank
      << "\nloop_word=" << analysis.loop_word.ToString() << '\n';
  for (const TubeVertex& v : spec.vertices()) {
    out << v.id << ' ' << VertexClassName(analysis.classification.at(v.id))
        << '\n';
  }
  return kExitOk;
}

int RunEnum(const Options& opt, std::ostream& out) {
  const EnumerationResult result =
      EnumerateKnotWords(opt.bridge, {MaxBridge(), opt.jobs});
  if (opt.json) {
    out << ToJson(result).dump() << '\n';
    return kExitOk;
  }
  for (const MorseWord& word : result.words) {
    out << word.ToString() << " width=" << Width(word) << '\n';
  }
  out << "count=" << result.count << " min_width=" << result.min_width
      << " witnesses=";
  for (std::size_t k = 0; k < result.witnesses.size(); ++k) {
    out << (k ? "," : "") << result.witnesses[k].ToString();
  }
  out << '\n';
  return kExitOk;
}

int RunTable(const Options& opt, std::ostream& out) {
  const auto table = MinWidthTable(opt.bridge, {MaxBridge(), opt.jobs});
  if (opt.json) {
    out << ToJson(table).dump() << '\n';
    return kExitOk;
  }
  out << "b count min_width witness\n";
  for (const TableRow& row : table) {
    out << row.bridge << ' ' << row.count << ' ' << row.min_width << ' '
        << row.witness.ToString() << '\n';
  }
  return kExitOk;
}

int RunVerify(const Options& opt, std::ostream& out) {
  const Suite suite = ParseSuite(opt.suite);
  SuiteLimits limits;
  limits.max_len = opt.max_len != 0 ? opt.max_len
                                    : (suite == Suite::kGraph ? 7 : 8);
  limits.max_n = opt.max_n;
  limits.jobs = opt.jobs;
  const SuiteReport report = RunPropertySuite(suite, limits);
  if (opt.json) {
    out << json{{"suite", SuiteName(report.suite)},
                {"passed", report.passed},
                {"instances", report.instances},
                {"counterexample", report.counterexample
                                       ? json(*report.counterexample)
                                       : json(nullptr)}}
               .dump()
        << '\n';
  } else if (report.passed) {
    out << SuiteName(suite) << " pass (" << report.instances << " checks)\n";
  } else {
    out << SuiteName(suite) << " FAIL: " << *report.counterexample << '\n';
  }
  return report.passed ? kExitOk : kExitFail;
}

}  // namespace

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  Options opt;
  CLI::App app{"Width calculus for Morse words, satellites and leveled graphs",
               "thinwidth"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Emit a single JSON document");
  app.add_option("--jobs", opt.jobs, "Worker threads for enum/table/verify")
      ->check(CLI::PositiveNumber);

  auto* width = app.add_subcommand("width", "Prefix sums, width and bridge number");
  width->add_option("word", opt.word, "Word over {a, b}")->required();

  auto* validate = app.add_subcommand("validate", "Check that a word is a knot word");
  validate->add_option("word", opt.word)->required();

  auto* blowup = app.add_subcommand("blowup", "Repeat every letter n times");
  blowup->add_option("word", opt.word)->required();
  blowup->add_option("-n", opt.n, "Winding number")->required();

  auto* op = app.add_subcommand("op", "Apply a type-1/type-2 operation sequence");
  op->add_option("word", opt.word)->required();
  op->add_option("--ops", opt.path, "JSON array of steps")->required();

  auto* gap = app.add_subcommand("gap", "width(satellite) - n^2 width(loop)");
  gap->add_option("satword", opt.word)->required();
  gap->add_option("loopword", opt.second_word)->required();
  gap->add_option("-n", opt.n, "Winding number")->required();

  auto* bound = app.add_subcommand("bound", "Per-critical-point lower bound");
  bound->add_option("loopword", opt.word)->required();
  bound->add_option("-n", opt.n, "Winding number")->required();

  auto* graph = app.add_subcommand("graph", "Leveled graph analysis");
  graph->require_subcommand(1);
  auto* loop = graph->add_subcommand("loop", "Find the unique loop of a spec");
  loop->add_option("spec", opt.path, "TubeSpec JSON file")->required();

  auto* enumerate = app.add_subcommand("enum", "List knot words of a bridge number");
  enumerate->add_option("-b", opt.bridge, "Bridge number")->required();

  auto* table = app.add_subcommand("table", "Minimum width per bridge number");
  table->add_option("-B", opt.bridge, "Largest bridge number")->required();

  auto* verify = app.add_subcommand("verify", "Run an exhaustive property suite");
  verify->add_option("suite", opt.suite, "lemma45, blowup, bound or graph")
      ->required();
  verify->add_option("--max-len", opt.max_len,
                     "Word length (vertex count for graph)");
  verify->add_option("--max-n", opt.max_n, "Largest winding number");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (width->parsed()) return RunWidth(opt, out);
    if (validate->parsed()) return RunValidate(opt, out);
    if (blowup->parsed()) return RunBlowup(opt, out);
    if (op->parsed()) return RunOp(opt, out);
    if (gap->parsed()) return RunGap(opt, out);
    if (bound->parsed()) return RunBound(opt, out);
    if (loop->parsed()) return RunGraphLoop(opt, out, err);
    if (enumerate->parsed()) return RunEnum(opt, out);
    if (table->parsed()) return RunTable(opt, out);
    if (verify->parsed()) return RunVerify(opt, out);
  } catch (const Error& e) {
    err << "thinwidth: " << e.what();
    if (e.step()) err << " (step " << *e.step() << ")";
    err << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "thinwidth: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace thinwidth::cli
