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
#include "thinwidth/enumerate.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <set>
#include <thread>
#include <utility>

#include "thinwidth/error.h"
#include "thinwidth/satellite.h"
#include "thinwidth/word_ops.h"

namespace thinwidth {
namespace {

constexpr std::int64_t kStep = 2;

// Backtracking over strand counts. A knot word of length t keeps every
// interior level >= 2 and must still be able to fall back to 0.
class KnotWordBuilder {
 public:
  explicit KnotWordBuilder(std::size_t length) : length_(length) {}

  // Valid prefixes of length `depth`, in lexicographic order.
  std::vector<std::vector<Letter>> Prefixes(std::size_t depth) const {
    std::vector<std::vector<Letter>> out;
    std::vector<Letter> current;
    Extend(current, 0, depth, out);
    return out;
  }

  void Complete(std::vector<Letter> prefix,
                std::vector<std::vector<Letter>>& out) const {
    std::int64_t level = 0;
    for (Letter l : prefix) level += l == Letter::kMin ? kStep : -kStep;
    Extend(prefix, level, length_, out);
  }

 private:
  bool Admissible(std::size_t position, std::int64_t level) const {
    const auto remaining = static_cast<std::int64_t>(length_ - position);
    if (position == length_) return level == 0;
    return level >= 2 && level <= kStep * remaining;
  }

  void Extend(std::vector<Letter>& current, std::int64_t level,
              std::size_t depth,
              std::vector<std::vector<Letter>>& out) const {
    if (current.size() == depth) {
      out.push_back(current);
      return;
    }
    for (Letter next : {Letter::kMin, Letter::kMax}) {
      const std::int64_t after = level + (next == Letter::kMin ? kStep : -kStep);
      if (!Admissible(current.size() + 1, after)) continue;
      current.push_back(next);
      Extend(current, after, depth, out);
      current.pop_back();
    }
  }

  std::size_t length_;
};

// Runs check(0..count-1) on `jobs` threads and returns the smallest index
// whose check failed, with its message. Indices past a known failure are
// skipped.
std::optional<std::pair<std::size_t, std::string>> FirstFailure(
    std::size_t count, unsigned jobs,
    const std::function<std::optional<std::string>(std::size_t,
                                                   std::uint64_t&)>& check,
    std::uint64_t& instances) {
  jobs = std::max(1u, jobs);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> total{0};
  std::vector<std::optional<std::pair<std::size_t, std::string>>> found(jobs);

  const auto worker = [&](unsigned slot) {
    std::uint64_t local = 0;
    for (std::size_t k = next++; k < count; k = next++) {
      if (k > best.load()) break;
      auto failure = check(k, local);
      if (!failure) continue;
      if (!found[slot] || k < found[slot]->first) {
        found[slot] = std::make_pair(k, std::move(*failure));
      }
      std::size_t seen = best.load();
      while (k < seen && !best.compare_exchange_weak(seen, k)) {
      }
      break;
    }
    total += local;
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned slot = 0; slot < jobs; ++slot) threads.emplace_back(worker, slot);
  }
  instances = total.load();

  std::optional<std::pair<std::size_t, std::string>> first;
  for (auto& f : found) {
    if (f && (!first || f->first < first->first)) first = std::move(f);
  }
  return first;
}

// Words of every length 0..max_len, indexed by (length, lexicographic).
struct WordIndex {
  std::size_t max_len;

  std::size_t size() const { return (std::size_t{2} << max_len) - 1; }

  MorseWord At(std::size_t unit) const {
    std::size_t length = 0;
    while ((std::size_t{2} << length) - 1 <= unit) ++length;
    const std::size_t code = unit - ((std::size_t{1} << length) - 1);
    std::vector<Letter> letters(length);
    for (std::size_t k = 0; k < length; ++k) {
      const bool bit = (code >> (length - 1 - k)) & 1U;
      letters[k] = bit ? Letter::kMax : Letter::kMin;
    }
    return MorseWord(std::move(letters));
  }
};

std::string Describe(const MorseWord& word) {
  return "word '" + word.ToString() + "'";
}

std::optional<std::string> CheckLemma45(const MorseWord& word,
                                        std::uint64_t& instances) {
  const WidthProfile before = Profile(word);
  for (const OpStep& step : LegalSteps(word)) {
    ++instances;
    const MorseWord after = Apply(word, step);
    const WidthProfile profile = Profile(after);
    const std::int64_t drop = before.width - profile.width;
    const std::string where = Describe(word) + " " + step.ToString();
    if (step.kind == OpStep::Kind::kType1) {
      if (drop != Type1WidthDrop(word, step.i, step.j)) {
        return where + ": drop " + std::to_string(drop) +
               " differs from the closed form";
      }
      // Monotonicity needs every prefix >= 0: "bab" -> "b" raises the width
      // from -4 to -2.
      if (!before.AllPrefixesNonnegative()) continue;
      if (drop < 0) return where + ": width increased";
      // Levels strictly between i and j fall by 2, so nonnegativity
      // survives exactly when each of them was at least 2 ("abab" with
      // (1, 4) gives "ba"). Knot words always qualify.
      bool between_ok = true;
      for (std::size_t k = step.i + 1; k < step.j; ++k) {
        between_ok = between_ok && before.prefix[k - 1] >= 2;
      }
      if (profile.AllPrefixesNonnegative() != between_ok) {
        return where + ": nonnegativity after deletion mispredicted";
      }
      if (before.validity == Validity::kKnot &&
          profile.validity < Validity::kNonnegative) {
        return where + ": knot word lost nonnegativity";
      }
    } else {
      if (drop != 0 && drop != 4) {
        return where + ": drop " + std::to_string(drop) + " not in {0, 4}";
      }
      if (drop != Type2WidthDrop(word, step.i)) {
        return where + ": drop differs from the closed form";
      }
    }
  }
  // The excluded "ba" exchange must be refused.
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (word.At(i) != Letter::kMax || word.At(i + 1) != Letter::kMin) continue;
    ++instances;
    try {
      Type2Swap(word, i);
      return Describe(word) + " type2@" + std::to_string(i) +
             ": excluded swap accepted";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kExcludedSwap) {
        return Describe(word) + ": wrong error " + e.what();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> CheckBlowup(const MorseWord& word,
                                       std::int64_t max_n,
                                       std::uint64_t& instances) {
  const WidthProfile base = Profile(word);
  if (base.validity < Validity::kBalanced) return std::nullopt;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    ++instances;
    const std::string where = Describe(word) + " n=" + std::to_string(n);
    const MorseWord blown = Blowup(word, n);
    const WidthProfile profile = Profile(blown);
    if (profile.width != n * n * base.width) {
      return where + ": width " + std::to_string(profile.width) +
             " != n^2 * " + std::to_string(base.width);
    }
    if (base.validity == Validity::kKnot && profile.validity != Validity::kKnot) {
      return where + ": blowup of a knot word is not a knot word";
    }
    if (*profile.bridge != n * *base.bridge) {
      return where + ": bridge not multiplied by n";
    }
    for (std::int64_t m = 1; m <= max_n; ++m) {
      if (Blowup(blown, m) != Blowup(word, n * m)) {
        return where + " m=" + std::to_string(m) + ": blowups do not compose";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> CheckBound(const MorseWord& word,
                                      std::int64_t max_n,
                                      std::uint64_t& instances) {
  const WidthProfile base = Profile(word);
  if (base.validity < Validity::kBalanced) return std::nullopt;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    ++instances;
    const std::string where = Describe(word) + " n=" + std::to_string(n);
    const BoundReport report = LowerBound(word, n);
    if (!report.identity_holds || report.total != n * n * base.width) {
      return where + ": total " + std::to_string(report.total) +
             " != n^2 * " + std::to_string(base.width);
    }
    if (report.total != Width(Blowup(word, n))) {
      return where + ": total differs from the blowup width";
    }
  }
  return std::nullopt;
}

// One arrangement of vertices into consecutive slabs and the candidate
// edges between neighboring slabs.
struct SlabLayout {
  std::vector<int> slab_of;
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  int top_slab = 0;

  std::size_t MaskCount() const { return std::size_t{1} << candidates.size(); }
};

std::vector<SlabLayout> SlabLayouts(std::size_t max_vertices) {
  std::vector<SlabLayout> layouts;
  for (std::size_t total = 1; total <= max_vertices; ++total) {
    // Compositions of `total`: bit k of `cuts` starts a new slab after
    // vertex k.
    for (std::size_t cuts = 0; cuts < (std::size_t{1} << (total - 1)); ++cuts) {
      SlabLayout layout;
      int slab = 0;
      for (std::size_t v = 0; v < total; ++v) {
        layout.slab_of.push_back(slab);
        if (v + 1 < total && ((cuts >> v) & 1U)) ++slab;
      }
      layout.top_slab = slab;
      for (std::size_t a = 0; a < total; ++a) {
        for (std::size_t b = a + 1; b < total; ++b) {
          if (layout.slab_of[b] == layout.slab_of[a] + 1) {
            layout.candidates.emplace_back(a, b);
          }
        }
      }
      layouts.push_back(std::move(layout));
    }
  }
  return layouts;
}

std::optional<TubeSpec> BuildSlabGraph(const SlabLayout& layout,
                                       std::size_t mask) {
  const std::size_t count = layout.slab_of.size();
  // Union-find style reachability on bitmasks.
  std::vector<std::uint32_t> reach(count);
  for (std::size_t v = 0; v < count; ++v) reach[v] = 1U << v;
  for (std::size_t e = 0; e < layout.candidates.size(); ++e) {
    if (!((mask >> e) & 1U)) continue;
    const auto [a, b] = layout.candidates[e];
    reach[a] |= 1U << b;
    reach[b] |= 1U << a;
  }
  std::uint32_t component = 1U;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t v = 0; v < count; ++v) {
      if (((component >> v) & 1U) && (reach[v] | component) != component) {
        component |= reach[v];
        grew = true;
      }
    }
  }
  if (component != (std::uint32_t{1} << count) - 1) return std::nullopt;

  std::vector<double> critical_values;
  for (int k = 1; k <= layout.top_slab; ++k) critical_values.push_back(k);
  std::vector<TubeVertex> vertices;
  for (std::size_t v = 0; v < count; ++v) {
    vertices.push_back({"v" + std::to_string(v), layout.slab_of[v]});
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t e = 0; e < layout.candidates.size(); ++e) {
    if ((mask >> e) & 1U) {
      edges.emplace_back(vertices[layout.candidates[e].first].id,
                         vertices[layout.candidates[e].second].id);
    }
  }
  return TubeSpec::Create(std::move(critical_values), std::move(vertices),
                          std::move(edges));
}

std::set<std::pair<std::size_t, std::size_t>> EdgeSet(
    const std::vector<std::size_t>& cycle) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const std::size_t a = cycle[k];
    const std::size_t b = cycle[(k + 1) % cycle.size()];
    edges.emplace(std::min(a, b), std::max(a, b));
  }
  return edges;
}

std::string DescribeSpec(const TubeSpec& spec) {
  return "graph " + spec.ToJson().dump();
}

std::optional<std::string> CheckGraph(const TubeSpec& spec,
                                      std::uint64_t& instances) {
  ++instances;
  const auto cycles = AllSimpleCycles(spec);
  const std::int64_t rank = spec.CycleRank();
  std::optional<LoopAnalysis> analysis;
  try {
    analysis = FindUniqueLoop(spec);
  } catch (const Error& e) {
    const bool expected =
        (rank == 0 && e.code() == ErrorCode::kNoLoop && cycles.empty()) ||
        (rank >= 2 && e.code() == ErrorCode::kMultipleLoops &&
         cycles.size() >= 2);
    if (!expected) return DescribeSpec(spec) + ": unexpected " + e.what();
    return std::nullopt;
  }
  if (rank != 1 || cycles.size() != 1) {
    return DescribeSpec(spec) + ": loop found with cycle rank " +
           std::to_string(rank) + " and " + std::to_string(cycles.size()) +
           " cycles";
  }
  std::vector<std::size_t> found;
  for (const std::string& id : analysis->loop) found.push_back(*spec.IndexOf(id));
  if (EdgeSet(found) != EdgeSet(cycles.front())) {
    return DescribeSpec(spec) + ": loop differs from the enumerated cycle";
  }

  std::size_t minima = 0;
  std::size_t maxima = 0;
  std::vector<TubeVertex> kept;
  for (const TubeVertex& v : spec.vertices()) {
    const VertexClass cls = analysis->classification.at(v.id);
    minima += cls == VertexClass::kMinimal;
    maxima += cls == VertexClass::kMaximal;
    if (cls != VertexClass::kIrrelevant) kept.push_back(v);
  }
  if (analysis->classification.size() != spec.vertices().size() ||
      minima != maxima || minima == 0) {
    return DescribeSpec(spec) + ": classification is not a balanced partition";
  }
  if (Classify(analysis->loop_word) < Validity::kBalanced) {
    return DescribeSpec(spec) + ": loop word is not balanced";
  }

  std::vector<std::pair<std::string, std::string>> kept_edges;
  for (const auto& [a, b] : spec.edges()) {
    if (analysis->classification.at(a) != VertexClass::kIrrelevant &&
        analysis->classification.at(b) != VertexClass::kIrrelevant) {
      kept_edges.emplace_back(a, b);
    }
  }
  const LoopAnalysis pruned = FindUniqueLoop(TubeSpec::Create(
      spec.critical_values(), std::move(kept), std::move(kept_edges)));
  if (pruned.loop != analysis->loop ||
      pruned.loop_word != analysis->loop_word) {
    return DescribeSpec(spec) + ": pruning irrelevant vertices changed the loop";
  }
  return std::nullopt;
}

void RequireLimits(Suite suite, const SuiteLimits& limits) {
  const std::size_t cap =
      suite == Suite::kGraph ? kMaxSuiteVertices : kMaxSuiteWordLength;
  if (limits.max_len > cap) {
    throw Error(ErrorCode::kLimitExceeded,
                "max length " + std::to_string(limits.max_len) +
                    " exceeds " + std::to_string(cap));
  }
  if (limits.max_n < 1 || limits.max_n > kMaxSuiteWinding) {
    throw Error(ErrorCode::kLimitExceeded,
                "max winding " + std::to_string(limits.max_n) +
                    " outside 1.." + std::to_string(kMaxSuiteWinding));
  }
}

}  // namespace

EnumerationResult EnumerateKnotWords(int bridge,
                                     const EnumerationOptions& options) {
  if (bridge < 1 || bridge > options.max_bridge) {
    throw Error(ErrorCode::kLimitExceeded,
                "bridge number " + std::to_string(bridge) + " outside 1.." +
                    std::to_string(options.max_bridge));
  }
  const std::size_t length = 2 * static_cast<std::size_t>(bridge);
  const KnotWordBuilder builder(length);
  const auto prefixes = builder.Prefixes(std::min<std::size_t>(length, 10));

  std::vector<std::vector<std::vector<Letter>>> parts(prefixes.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < prefixes.size(); k = next++) {
      builder.Complete(prefixes[k], parts[k]);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned k = 0; k < jobs; ++k) threads.emplace_back(worker);
  }

  EnumerationResult result;
  result.bridge = bridge;
  result.min_width = std::numeric_limits<std::int64_t>::max();
  for (auto& part : parts) {
    for (auto& letters : part) {
      MorseWord word(std::move(letters));
      const std::int64_t width = Width(word);
      if (width < result.min_width) {
        result.min_width = width;
        result.witnesses.clear();
      }
      if (width == result.min_width) result.witnesses.push_back(word);
      result.words.push_back(std::move(word));
    }
  }
  result.count = result.words.size();
  return result;
}

std::vector<TableRow> MinWidthTable(int max_bridge,
                                    const EnumerationOptions& options) {
  if (max_bridge < 1 || max_bridge > options.max_bridge) {
    throw Error(ErrorCode::kLimitExceeded,
                "table bound " + std::to_string(max_bridge) + " outside 1.." +
                    std::to_string(options.max_bridge));
  }
  std::vector<TableRow> rows;
  for (int b = 1; b <= max_bridge; ++b) {
    EnumerationResult result = EnumerateKnotWords(b, options);
    rows.push_back({b, result.count, result.min_width,
                    std::move(result.witnesses.front())});
  }
  return rows;
}

nlohmann::json ToJson(const EnumerationResult& result) {
  const auto strings = [](const std::vector<MorseWord>& words) {
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const MorseWord& w : words) out.push_back(w.ToString());
    return out;
  };
  return {{"bridge", result.bridge},
          {"count", result.count},
          {"min_width", result.min_width},
          {"witnesses", strings(result.witnesses)},
          {"words", strings(result.words)}};
}

nlohmann::json ToJson(const std::vector<TableRow>& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TableRow& row : table) {
    rows.push_back({{"bridge", row.bridge},
                    {"count", row.count},
                    {"min_width", row.min_width},
                    {"witness", row.witness.ToString()}});
  }
  return rows;
}

std::string_view SuiteName(Suite suite) {
  switch (suite) {
    case Suite::kLemma45: return "LEMMA45";
    case Suite::kBlowup: return "BLOWUP";
    case Suite::kBound: return "BOUND";
    case Suite::kGraph: return "GRAPH";
  }
  return "LEMMA45";
}

Suite ParseSuite(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Suite s : {Suite::kLemma45, Suite::kBlowup, Suite::kBound, Suite::kGraph}) {
    if (upper == SuiteName(s)) return s;
  }
  throw Error(ErrorCode::kUnknownSuite,
              "unknown suite '" + std::string(name) +
                  "' (expected lemma45, blowup, bound or graph)");
}

SuiteReport RunPropertySuite(Suite suite, const SuiteLimits& limits) {
  RequireLimits(suite, limits);
  SuiteReport report;
  report.suite = suite;

  std::optional<std::pair<std::size_t, std::string>> failure;
  if (suite == Suite::kGraph) {
    const auto layouts = SlabLayouts(limits.max_len);
    std::vector<std::size_t> offsets{0};
    for (const SlabLayout& layout : layouts) {
      offsets.push_back(offsets.back() + layout.MaskCount());
    }
    failure = FirstFailure(
        offsets.back(), limits.jobs,
        [&](std::size_t unit, std::uint64_t& instances)
            -> std::optional<std::string> {
          const auto it =
              std::upper_bound(offsets.begin(), offsets.end(), unit) - 1;
          const auto& layout = layouts[it - offsets.begin()];
          const auto spec = BuildSlabGraph(layout, unit - *it);
          if (!spec) return std::nullopt;
          return CheckGraph(*spec, instances);
        },
        report.instances);
  } else {
    const WordIndex index{limits.max_len};
    failure = FirstFailure(
        index.size(), limits.jobs,
        [&](std::size_t unit, std::uint64_t& instances)
            -> std::optional<std::string> {
          const MorseWord word = index.At(unit);
          switch (suite) {
            case Suite::kLemma45: return CheckLemma45(word, instances);
            case Suite::kBlowup: return CheckBlowup(word, limits.max_n, instances);
            case Suite::kBound: return CheckBound(word, limits.max_n, instances);
            case Suite::kGraph: break;
          }
          return std::nullopt;
        },
        report.instances);
  }
  if (failure) {
    report.passed = false;
    report.counterexample = std::move(failure->second);
  }
  return report;
}

void ForEachSlabGraph(std::size_t max_vertices,
                      const std::function<void(const TubeSpec&)>& visit) {
  for (const SlabLayout& layout : SlabLayouts(max_vertices)) {
    for (std::size_t mask = 0; mask < layout.MaskCount(); ++mask) {
      if (auto spec = BuildSlabGraph(layout, mask)) visit(*spec);
    }
  }
}

std::vector<std::vector<std::size_t>> AllSimpleCycles(const TubeSpec& spec) {
  std::vector<std::vector<std::size_t>> cycles;
  const std::size_t count = spec.vertices().size();
  std::vector<std::size_t> path;
  std::vector<bool> on_path(count, false);

  const std::function<void(std::size_t)> extend = [&](std::size_t v) {
    for (std::size_t u : spec.Neighbors(v)) {
      if (u == path.front() && path.size() >= 3 && path[1] < path.back()) {
        cycles.push_back(path);
      } else if (u > path.front() && !on_path[u]) {
        path.push_back(u);
        on_path[u] = true;
        extend(u);
        on_path[u] = false;
        path.pop_back();
      }
    }
  };
  for (std::size_t start = 0; start < count; ++start) {
    path = {start};
    on_path[start] = true;
    extend(start);
    on_path[start] = false;
  }
  return cycles;
}

}  // namespace thinwidth
