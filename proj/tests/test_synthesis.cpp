#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treedyn/snowflake.hpp"
#include "treedyn/synthesis.hpp"

using namespace treedyn;

namespace {

Tree star(int k) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (int i = 1; i <= k; ++i) e.push_back({0, i});
  return Tree(k + 1, std::move(e));
}

Tree path(int n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Tree(n, std::move(e));
}

std::set<long> tailUpTo(long key, long cutoff) {
  std::set<long> out;
  for (long m = 1; m <= cutoff; ++m)
    if (inSharkovskiiTail(SharkovskiiKey::finite(key), m)) out.insert(m);
  return out;
}

}  // namespace

TEST_CASE("interval realizers have period set S(key)") {
  struct Case {
    long key;
    long cutoff;
  };
  for (Case c : {Case{1, 6}, {2, 8}, {3, 8}, {4, 16}, {5, 8}, {6, 12}, {8, 16}}) {
    CAPTURE(c.key);
    PLTreeMap m = realizeInterval(c.key);
    // fixed endpoints, as the spike construction requires
    CHECK(m.node_image[0] == 0);
    CHECK(m.node_image[m.domain.nodeCount() - 1] == m.domain.nodeCount() - 1);
    auto en = enumeratePeriods(m, c.cutoff);
    CHECK(en.budget_exceeded.empty());
    CHECK(en.periods.finite == tailUpTo(c.key, c.cutoff));
  }
}

TEST_CASE("period set synthesis on stars and intervals") {
  SUBCASE("3-star, n=3, key=2") {
    auto s = synthPeriodSet(star(3), 3, SharkovskiiKey::finite(2));
    CHECK(s.declared_entropy_zero);
    auto v = verifySynthesized(s, 15);
    CHECK(v.ok);
    CHECK(v.found == std::set<long>{1, 3, 6});
  }
  SUBCASE("3-star, n=3, key=3") {
    auto s = synthPeriodSet(star(3), 3, SharkovskiiKey::finite(3));
    CHECK_FALSE(s.declared_entropy_zero);
    auto v = verifySynthesized(s, 12);
    CHECK(v.ok);
    CHECK(v.found == std::set<long>{1, 3, 6, 9, 12});
  }
  SUBCASE("interval, n=2, key=4") {
    auto s = synthPeriodSet(path(2), 2, SharkovskiiKey::finite(4));
    auto v = verifySynthesized(s, 16);
    CHECK(v.ok);
    CHECK(v.found == std::set<long>{1, 2, 4, 8});
  }
  SUBCASE("n=1 degenerates to a glued interval realizer") {
    auto s = synthPeriodSet(path(3), 1, SharkovskiiKey::finite(2));
    auto v = verifySynthesized(s, 8);
    CHECK(v.ok);
    CHECK(v.found == std::set<long>{1, 2});
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(synthPeriodSet(star(3), 4, SharkovskiiKey::finite(2)),
                    SynthesisError);
    CHECK_THROWS_AS(synthPeriodSet(star(3), 3, SharkovskiiKey::twoInf()),
                    SynthesisError);
    CHECK_THROWS_AS(synthPeriodSet(Tree(1, {}), 1, SharkovskiiKey::finite(1)),
                    SynthesisError);
  }
}

TEST_CASE("snowflake extension: rotation, doubling, fixed point") {
  SUBCASE("3-star rotation") {
    auto s = synthSnowflakeMap(star(3), {1, 2, 3});
    CHECK(s.declared_entropy_zero);
    auto v = verifySynthesized(s, 6);
    CHECK(v.ok);
    CHECK(v.found == std::set<long>{1, 3});
  }
  SUBCASE("interval simple period-4 orbit") {
    // times in spatial order: 0, 2, 1, 3
    auto s = synthSnowflakeMap(path(4), {0, 2, 1, 3});
    auto v = verifySynthesized(s, 8);
    CHECK(v.ok);
    CHECK(v.found == std::set<long>{1, 2, 4});
  }
  SUBCASE("period-1 pattern") {
    auto s = synthSnowflakeMap(path(3), {1});
    auto v = verifySynthesized(s, 4);
    CHECK(v.ok);
    CHECK(v.found == std::set<long>{1});
  }
  SUBCASE("orbit dynamics preserved and type round-trips") {
    std::vector<NodeId> orbit{1, 2, 3};
    auto s = synthSnowflakeMap(star(3), orbit);
    for (size_t i = 0; i < orbit.size(); ++i)
      CHECK(s.map.node_image[orbit[i]] == orbit[(i + 1) % orbit.size()]);
    Pattern back = Pattern::validate(s.map.domain, orbit);
    REQUIRE(decompose(back));
    CHECK(decompose(back)->levels == std::vector<int>{1, 3});
  }
  SUBCASE("non-snowflake rejected") {
    CHECK_THROWS_AS(synthSnowflakeMap(path(3), {0, 1, 2}), SynthesisError);
  }
}

TEST_CASE("prop3: zero-entropy snowflake orbits of period 2^k m") {
  SUBCASE("3-star, m=3, k=0 is the rotation") {
    auto r = synthProp3(star(3), 3, 0);
    CHECK(r.orbit.size() == 3);
    auto v = verifySynthesized(r.map, 6);
    CHECK(v.ok);
  }
  SUBCASE("3-star, m=3, k=1 gives a period-6 snowflake") {
    auto r = synthProp3(star(3), 3, 1);
    REQUIRE(r.orbit.size() == 6);
    Pattern p = Pattern::validate(r.map.map.domain, r.orbit);
    auto type = decompose(p);
    REQUIRE(type.has_value());
    CHECK(type->levels.back() == 6);
    auto v = verifySynthesized(r.map, 12);
    CHECK(v.ok);
    CHECK(v.found == std::set<long>{1, 3, 6});
  }
  SUBCASE("interval, m=2, k=2 gives a period-8 simple orbit") {
    auto r = synthProp3(path(2), 2, 2);
    REQUIRE(r.orbit.size() == 8);
    Pattern p = Pattern::validate(r.map.map.domain, r.orbit);
    auto type = decompose(p);
    REQUIRE(type.has_value());
    CHECK(type->levels == std::vector<int>{1, 2, 4, 8});
    CHECK(verifySynthesized(r.map, 16).ok);
  }
  SUBCASE("m above the endpoint count is rejected") {
    CHECK_THROWS_AS(synthProp3(star(3), 4, 1), SynthesisError);
  }
}

TEST_CASE("declaredUpTo matches the membership predicate") {
  auto s = synthPeriodSet(star(3), 3, SharkovskiiKey::finite(6));
  auto declared = s.declaredUpTo(24);
  for (long p = 1; p <= 24; ++p)
    CHECK(static_cast<bool>(declared.count(p)) == s.declared_period(p));
  // {1} u 3*S(6): S(6) = {6, 10, ...} u 4*odd u powers of two
  CHECK(declared.count(18));   // 3 * 6
  CHECK(declared.count(12));   // 3 * 4
  CHECK_FALSE(declared.count(9));  // 3 * 3, but 3 not in S(6)
}
