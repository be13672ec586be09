#pragma once

#include <map>
#include <string>
#include <vector>

#include "treedyn/pattern.hpp"

namespace treedyn {

/// All normalized patterns of the given period on trees with at most
/// max_endpoints endpoints: orbit nodes plus up to max_endpoints - 2 branch
/// nodes of degree >= 3, deduplicated up to isomorphism respecting the cyclic
/// time order. Orbit node ids equal their time indices.
std::vector<Pattern> enumeratePatterns(int period, int max_endpoints);

/// Block's simple-orbit test for interval patterns (hull with <= 2
/// endpoints): period 1, or the spatial halves swap under the time shift and
/// both halves are simple under the second-return map.
bool blockSimple(const Pattern& p);

/// Human-readable one-line form: period, edge list, orbit labels.
std::string patternRepr(const Pattern& p);

struct SweepOptions {
  int max_period = 6;
  int max_endpoints = 3;
  double tol = 1e-9;
  long budget = 5'000'000;
};

struct SweepResult {
  long corpus_size = 0;
  long snowflakes = 0;
  long non_snowflakes = 0;
  long multi_chain = 0;                 // patterns with several valid chains
  std::map<int, long> by_period;
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

/// Exhaustive model-scale verification over the pattern corpus. Per pattern:
/// the connect-the-dots model restricts to the time shift on orbit nodes;
/// snowflakes have admissible periods and a verified zero-entropy extension
/// (periods {1, m_1, ..., m_k} up to 2N, radius flag true); non-snowflakes
/// have exact radius flag false; ap-period models respect the entropy lower
/// bound; interval patterns of period <= 8 agree with the Block simple-orbit
/// test. Any violation is reported verbatim.
SweepResult runSweep(const SweepOptions& opt);

}  // namespace treedyn
