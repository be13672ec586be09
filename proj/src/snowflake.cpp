#include "treedyn/snowflake.hpp"

#include <algorithm>

namespace treedyn {

namespace {

// hulls of the residue blocks mod m, as node sets
std::vector<std::vector<NodeId>> blockHulls(const Pattern& p, int m) {
  std::vector<std::vector<NodeId>> out;
  for (const Block& b : p.blocks(m)) out.push_back(p.tree().hull(b.nodes));
  return out;
}

bool pairwiseDisjoint(const std::vector<std::vector<NodeId>>& sets,
                      int node_count) {
  std::vector<char> used(node_count, 0);
  for (auto& s : sets)
    for (NodeId v : s) {
      if (used[v]) return false;
      used[v] = 1;
    }
  return true;
}

}  // namespace

bool levelValid(const Pattern& p, int m_prev, int m) {
  int n = p.period();
  if (m_prev < 1 || m <= m_prev || n % m != 0 || m % m_prev != 0)
    throw PatternError("levels must form a divisor chain");
  auto hulls = blockHulls(p, m);
  if (!pairwiseDisjoint(hulls, p.tree().nodeCount())) return false;
  for (int r = 0; r < m_prev; ++r) {
    std::vector<Subtree> family;
    for (int s = r; s < m; s += m_prev)
      family.emplace_back(p.tree(), hulls[s]);
    if (!isSurrounding(p.tree(), family)) return false;
  }
  return true;
}

namespace {

// DFS over divisor chains; smallest next divisor first, so the first complete
// chain found is the lexicographically smallest.
bool searchChain(const Pattern& p, int n, std::vector<int>& chain) {
  int m_prev = chain.back();
  if (m_prev == n) return true;
  for (int m = 2 * m_prev; m <= n; m += m_prev) {
    if (n % m != 0) continue;
    if (!levelValid(p, m_prev, m)) continue;
    chain.push_back(m);
    if (searchChain(p, n, chain)) return true;
    chain.pop_back();
  }
  return false;
}

long countChainsFrom(const Pattern& p, int n, int m_prev) {
  if (m_prev == n) return 1;
  long total = 0;
  for (int m = 2 * m_prev; m <= n; m += m_prev) {
    if (n % m != 0) continue;
    if (levelValid(p, m_prev, m)) total += countChainsFrom(p, n, m);
  }
  return total;
}

}  // namespace

std::optional<SnowflakeType> decompose(const Pattern& p) {
  int n = p.period();
  std::vector<int> chain{1};
  if (!searchChain(p, n, chain)) return std::nullopt;
  return SnowflakeType{std::move(chain)};
}

bool isSnowflake(const Pattern& p) { return decompose(p).has_value(); }

long countChains(const Pattern& p) { return countChainsFrom(p, p.period(), 1); }

}  // namespace treedyn
