#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "treedyn/forcing.hpp"
#include "treedyn/pattern.hpp"
#include "treedyn/plmap.hpp"
#include "treedyn/snowflake.hpp"

namespace treedyn {

class SynthesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A constructed map together with the period-set and entropy claims it is
/// required to satisfy. Claims are re-checked by the plmap oracle, never
/// trusted.
struct SynthesizedMap {
  PLTreeMap map;
  std::function<bool(long)> declared_period;  // membership predicate
  std::string declared_description;
  bool declared_entropy_zero = false;

  std::set<long> declaredUpTo(long cutoff) const;
};

struct SynthVerification {
  bool ok = false;
  bool radius_flag_ok = false;
  bool periods_ok = false;
  double radius = 0.0;
  std::set<long> expected;
  std::set<long> found;
  std::vector<long> budget_exceeded;
};

/// Oracle check of a synthesized map's claims up to the cutoff.
SynthVerification verifySynthesized(const SynthesizedMap& s, long cutoff,
                                    double tol = 1e-9,
                                    long budget = 5'000'000);

/// PL interval map with period set exactly S(key) and both endpoints fixed:
/// the Stefan cycle for odd keys > 1, period doubling for keys with an even
/// part, a monotone map for key 1.
PLTreeMap realizeInterval(long key);

/// Map on the ambient tree whose period set is {1} union n*S(key): n spike
/// edges rotate through each other, identity elsewhere, and the n-th return
/// to the first spike is conjugate to the interval realizer of S(key).
/// Requires 1 <= n <= End(ambient) and a finite key.
SynthesizedMap synthPeriodSet(const Tree& ambient, int n, SharkovskiiKey key);

/// Zero-entropy extension of a snowflake pattern: orbit dynamics preserved,
/// every other point funnels toward one cycle per level; period set
/// {1, m_1, ..., m_k}. The orbit is given by node ids of the ambient tree.
SynthesizedMap synthSnowflakeMap(const Tree& ambient,
                                 const std::vector<NodeId>& orbit);
SynthesizedMap synthSnowflakeMap(const Pattern& p);

struct Prop3Result {
  SynthesizedMap map;
  std::vector<NodeId> orbit;  // node orbit of period 2^k * m in map.domain
};

/// Zero-entropy map with a snowflake periodic orbit of exact period 2^k * m
/// (m rotating spikes composed with k period doublings).
Prop3Result synthProp3(const Tree& ambient, int m, int k);

}  // namespace treedyn
