#include "treedyn/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "treedyn/forcing.hpp"
#include "treedyn/plmap.hpp"
#include "treedyn/snowflake.hpp"
#include "treedyn/synthesis.hpp"

namespace treedyn {

namespace {

// Prüfer decode: every labeled tree on n >= 2 nodes once
std::vector<std::pair<NodeId, NodeId>> pruferDecode(const std::vector<int>& seq,
                                                    int n) {
  std::vector<int> deg(n, 1);
  for (int v : seq) ++deg[v];
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  std::vector<int> rest = seq;
  for (int v : rest) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, v});
    if (--deg[v] == 1) leaves.insert(v);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return edges;
}

// canonical form over time-origin rotations and branch-node permutations
std::vector<std::pair<int, int>> canonicalForm(
    const std::vector<std::pair<NodeId, NodeId>>& edges, int period,
    int branch_count) {
  std::vector<int> perm(branch_count);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  do {
    for (int c = 0; c < period; ++c) {
      auto relabel = [&](int v) {
        return v < period ? (v + c) % period : period + perm[v - period];
      };
      std::vector<std::pair<int, int>> form;
      for (auto& [a, b] : edges) {
        int x = relabel(a), y = relabel(b);
        form.push_back({std::min(x, y), std::max(x, y)});
      }
      std::sort(form.begin(), form.end());
      if (best.empty() || form < best) best = form;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::string> nodeLabels(int period, int branch_count) {
  std::vector<std::string> labels;
  for (int t = 0; t < period; ++t) labels.push_back("t" + std::to_string(t));
  for (int b = 0; b < branch_count; ++b)
    labels.push_back("b" + std::to_string(b));
  return labels;
}

bool simpleRec(const std::vector<int>& times) {
  int n = static_cast<int>(times.size());
  if (n == 1) return true;
  if (n % 2 != 0) return false;
  int parity = times[0] % 2;
  for (int i = 1; i < n / 2; ++i)
    if (times[i] % 2 != parity) return false;
  for (int i = n / 2; i < n; ++i)
    if (times[i] % 2 == parity) return false;
  auto half = [&](int from) {
    std::vector<int> h;
    for (int i = from; i < from + n / 2; ++i)
      h.push_back((times[i] - times[i] % 2) / 2);
    return h;
  };
  return simpleRec(half(0)) && simpleRec(half(n / 2));
}

}  // namespace

std::vector<Pattern> enumeratePatterns(int period, int max_endpoints) {
  if (period < 1 || max_endpoints < 2)
    throw PatternError("bad enumeration limits");
  std::vector<Pattern> out;
  std::set<std::vector<std::pair<int, int>>> seen;

  for (int b = 0; b <= max_endpoints - 2; ++b) {
    int n = period + b;
    if (n == 1) {
      out.push_back(Pattern::validate(Tree(1, {}, nodeLabels(1, 0)), {0}));
      continue;
    }
    std::vector<int> seq(std::max(n - 2, 0), 0);
    while (true) {
      auto edges = pruferDecode(seq, n);
      std::vector<int> deg(n, 0);
      for (auto& [x, y] : edges) ++deg[x], ++deg[y];
      bool admissible = true;
      int end_count = 0;
      for (int v = 0; v < n && admissible; ++v) {
        if (v >= period && deg[v] < 3) admissible = false;  // branch nodes
        if (deg[v] == 1) ++end_count;
      }
      if (admissible && end_count <= max_endpoints) {
        auto canon = canonicalForm(edges, period, b);
        if (seen.insert(canon).second) {
          std::vector<NodeId> orbit(period);
          std::iota(orbit.begin(), orbit.end(), 0);
          out.push_back(Pattern::validate(
              Tree(n, edges, nodeLabels(period, b)), orbit));
        }
      }
      // next Prüfer sequence
      int i = static_cast<int>(seq.size()) - 1;
      while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
      if (i < 0) break;
      ++seq[i];
    }
  }
  return out;
}

bool blockSimple(const Pattern& p) {
  const Tree& t = p.tree();
  if (t.reduce().end_count > 2)
    throw PatternError("Block simple-orbit test needs an interval hull");
  std::vector<int> times;
  if (t.nodeCount() == 1) {
    times = {0};
  } else {
    std::vector<NodeId> ends;
    for (NodeId v = 0; v < t.nodeCount(); ++v)
      if (t.degree(v) == 1) ends.push_back(v);
    for (NodeId v : t.path(ends[0], ends[1])) times.push_back(p.timeIndex(v));
  }
  for (int x : times)
    if (x < 0) throw PatternError("interval pattern with unmarked node");
  return simpleRec(times);
}

std::string patternRepr(const Pattern& p) {
  std::ostringstream os;
  os << "period=" << p.period() << " edges=";
  for (auto& [a, b] : p.tree().edges())
    os << "(" << p.tree().label(a) << "," << p.tree().label(b) << ")";
  return os.str();
}

SweepResult runSweep(const SweepOptions& opt) {
  SweepResult res;
  auto fail = [&](const Pattern& p, const std::string& what) {
    res.counterexamples.push_back(what + ": " + patternRepr(p));
  };

  for (int period = 1; period <= opt.max_period; ++period) {
    for (const Pattern& p : enumeratePatterns(period, opt.max_endpoints)) {
      ++res.corpus_size;
      ++res.by_period[period];
      auto shape = p.tree().reduce();

      PLTreeMap model = connectTheDots(p);
      for (NodeId v : p.orbit())
        if (model.node_image[v] != p.theta(v)) fail(p, "realization");

      auto spectral = spectralRadius(transitionMatrix(model), opt.tol);
      auto chain = decompose(p);

      if (chain) {
        ++res.snowflakes;
        if (countChains(p) > 1) ++res.multi_chain;
        if (!shape.degenerate &&
            !zeroEntropyAdmissible(period, shape.end_count, shape.edge_count))
          fail(p, "snowflake with inadmissible period");
        auto v = verifySynthesized(synthSnowflakeMap(p), 2L * period, opt.tol,
                                   opt.budget);
        if (!v.ok) fail(p, "snowflake extension failed verification");
      } else {
        ++res.non_snowflakes;
        if (spectral.at_most_one) fail(p, "non-snowflake with radius <= 1");
      }

      if (shape.end_count >= 2 && isApNumber(period, shape.end_count) &&
          spectral.radius <
              std::exp(entropyLowerBound(period, shape.end_count)) - opt.tol)
        fail(p, "entropy bound violated");

      if (shape.end_count <= 2 && period <= 8 &&
          blockSimple(p) != static_cast<bool>(chain))
        fail(p, "interval simple-orbit disagreement");
    }
  }
  return res;
}

}  // namespace treedyn
