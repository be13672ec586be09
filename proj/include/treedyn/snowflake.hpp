#pragma once

#include <optional>
#include <vector>

#include "treedyn/pattern.hpp"

namespace treedyn {

/// Level chain 1 = m_0 < m_1 < ... < m_k = N of a combinatorial snowflake.
/// Consecutive levels divide each other. A fixed point has the chain (1).
struct SnowflakeType {
  std::vector<int> levels;

  friend bool operator==(const SnowflakeType&, const SnowflakeType&) = default;
};

/// One level step of the combinatorial snowflake test: hulls of the blocks
/// mod m are pairwise disjoint, and inside each residue class mod m_prev the
/// child hulls form a surrounding family.
bool levelValid(const Pattern& p, int m_prev, int m);

/// Finds a valid divisor chain by depth-first search, extending each level by
/// the smallest valid divisor first; returns the lexicographically smallest
/// chain, or nullopt if the pattern is not a snowflake.
std::optional<SnowflakeType> decompose(const Pattern& p);

bool isSnowflake(const Pattern& p);

/// Number of distinct valid chains (uniqueness probe for the sweep; the
/// theory does not promise the chain is unique).
long countChains(const Pattern& p);

}  // namespace treedyn
