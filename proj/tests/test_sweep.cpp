#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "treedyn/snowflake.hpp"
#include "treedyn/sweep.hpp"

using namespace treedyn;

TEST_CASE("pattern corpus: trivial sizes") {
  CHECK(enumeratePatterns(1, 3).size() == 1);
  CHECK(enumeratePatterns(2, 3).size() == 1);
  // all interval 3-cycles are one pattern up to symmetry
  CHECK(enumeratePatterns(3, 2).size() == 1);
}

TEST_CASE("corpus patterns are normalized and distinct") {
  auto corpus = enumeratePatterns(4, 3);
  CHECK(!corpus.empty());
  std::set<std::string> reprs;
  for (const Pattern& p : corpus) {
    CHECK(p.period() == 4);
    CHECK(p.tree().reduce().end_count <= 3);
    for (NodeId v = 0; v < p.tree().nodeCount(); ++v) {
      if (p.timeIndex(v) < 0) CHECK(p.tree().degree(v) >= 3);
      if (p.tree().degree(v) == 1) CHECK(p.timeIndex(v) >= 0);
    }
    CHECK(reprs.insert(patternRepr(p)).second);
  }
}

TEST_CASE("period-3 star rotation appears once at endpoints 3") {
  auto corpus = enumeratePatterns(3, 3);
  int snow = 0;
  for (const Pattern& p : corpus) snow += isSnowflake(p) ? 1 : 0;
  CHECK(snow == 1);  // exactly the 3-star rotation
  CHECK(corpus.size() == 2);  // interval 3-cycle and star rotation
}

TEST_CASE("block simple-orbit oracle") {
  auto mk = [](const std::vector<int>& times) {
    int n = static_cast<int>(times.size());
    std::vector<std::pair<NodeId, NodeId>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    std::vector<NodeId> orbit(n);
    for (int pos = 0; pos < n; ++pos) orbit[times[pos]] = pos;
    return Pattern::validate(Tree(n, std::move(e)), orbit);
  };
  CHECK(blockSimple(mk({0})));
  CHECK(blockSimple(mk({0, 1})));
  CHECK(blockSimple(mk({0, 2, 1, 3})));
  CHECK(blockSimple(mk({0, 2, 3, 1})));
  CHECK_FALSE(blockSimple(mk({0, 1, 2})));      // odd period > 1
  CHECK_FALSE(blockSimple(mk({0, 1, 2, 3})));   // halves do not swap
  CHECK_FALSE(blockSimple(mk({0, 2, 4, 1, 3, 5})));  // 3 odd inside
}

TEST_CASE("simple orbits coincide with interval snowflakes to period 8") {
  for (int n = 1; n <= 8; ++n)
    for (const Pattern& p : enumeratePatterns(n, 2))
      CHECK(blockSimple(p) == isSnowflake(p));
}

TEST_CASE("sweep at reduced scale finds no counterexamples") {
  SweepOptions opt;
  opt.max_period = 4;
  opt.max_endpoints = 3;
  auto res = runSweep(opt);
  CHECK(res.ok());
  CHECK(res.corpus_size > 0);
  CHECK(res.snowflakes + res.non_snowflakes == res.corpus_size);
  long total = 0;
  for (auto& [n, c] : res.by_period) total += c;
  CHECK(total == res.corpus_size);
}

TEST_CASE("every period-5 pattern at 3 endpoints is a non-snowflake") {
  for (const Pattern& p : enumeratePatterns(5, 3))
    CHECK_FALSE(isSnowflake(p));
}
