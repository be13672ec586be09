#include "treedyn/plmap.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace treedyn {

PLTreeMap PLTreeMap::fromNodeImages(Tree domain,
                                    std::vector<NodeId> node_image) {
  if (static_cast<int>(node_image.size()) != domain.nodeCount())
    throw PLMapError("node image must be total");
  for (NodeId v : node_image)
    if (!domain.hasNode(v)) throw PLMapError("node image leaves the tree");
  PLTreeMap m{std::move(domain), std::move(node_image), {}};
  m.edge_path.reserve(m.domain.edgeCount());
  for (auto& [u, v] : m.domain.edges())
    m.edge_path.push_back(m.domain.path(m.node_image[u], m.node_image[v]));
  return m;
}

namespace {

// nearest orbit node in the direction of neighbor d from branch node b
NodeId nearestMarked(const Pattern& p, NodeId b, NodeId d) {
  const Tree& t = p.tree();
  std::vector<int> dist(t.nodeCount(), -1);
  std::queue<NodeId> q;
  dist[b] = 0;
  dist[d] = 1;
  q.push(d);
  NodeId best = -1;
  int best_dist = -1;
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop();
    if (best >= 0 && dist[v] > best_dist) break;
    if (p.timeIndex(v) >= 0) {
      if (best < 0 || dist[v] < best_dist ||
          (dist[v] == best_dist && v < best)) {
        best = v;
        best_dist = dist[v];
      }
      continue;
    }
    for (NodeId w : t.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  if (best < 0) throw PLMapError("direction contains no orbit node");
  return best;
}

}  // namespace

PLTreeMap connectTheDots(const Pattern& p) {
  const Tree& t = p.tree();
  std::vector<NodeId> image(t.nodeCount(), -1);
  for (NodeId v = 0; v < t.nodeCount(); ++v) {
    if (p.timeIndex(v) >= 0) {
      image[v] = p.theta(v);
      continue;
    }
    // iterated median of the direction images, folding in neighbor order
    std::vector<NodeId> q;
    for (NodeId d : t.neighbors(v)) q.push_back(p.theta(nearestMarked(p, v, d)));
    NodeId acc = q[0];
    for (size_t j = 1; j + 1 < q.size(); ++j)
      acc = t.median(acc, q[j], q[j + 1]);
    image[v] = acc;
  }
  return PLTreeMap::fromNodeImages(t, std::move(image));
}

TransitionMatrix transitionMatrix(const PLTreeMap& m) {
  int n = m.domain.edgeCount();
  TransitionMatrix out{std::vector<std::vector<long>>(
      n, std::vector<long>(n, 0))};
  for (int e = 0; e < n; ++e) {
    const auto& path = m.edge_path[e];
    for (size_t i = 0; i + 1 < path.size(); ++i)
      ++out.entries[e][m.domain.edgeIndex(path[i], path[i + 1])];
  }
  return out;
}

namespace {

// Tarjan strongly connected components
struct SCC {
  std::vector<int> comp;
  int count = 0;
};

SCC stronglyConnected(const std::vector<std::vector<long>>& a) {
  int n = static_cast<int>(a.size());
  SCC out{std::vector<int>(n, -1), 0};
  std::vector<int> low(n), idx(n, -1), stk;
  std::vector<char> on(n, 0);
  int next = 0;
  // iterative Tarjan
  struct Frame {
    int v;
    int child;
  };
  for (int root = 0; root < n; ++root) {
    if (idx[root] >= 0) continue;
    std::vector<Frame> frames{{root, 0}};
    idx[root] = low[root] = next++;
    stk.push_back(root);
    on[root] = 1;
    while (!frames.empty()) {
      int v = frames.back().v;
      bool descended = false;
      int w = frames.back().child;
      for (; w < n; ++w) {
        if (a[v][w] == 0) continue;
        if (idx[w] < 0) {
          // record resume point before push_back invalidates the frame
          frames.back().child = w + 1;
          idx[w] = low[w] = next++;
          stk.push_back(w);
          on[w] = 1;
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on[w]) low[v] = std::min(low[v], idx[w]);
      }
      if (descended) continue;
      if (low[v] == idx[v]) {
        while (true) {
          int w = stk.back();
          stk.pop_back();
          on[w] = 0;
          out.comp[w] = out.count;
          if (w == v) break;
        }
        ++out.count;
      }
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().v] = std::min(low[frames.back().v], low[v]);
    }
  }
  return out;
}

bool radiusAtMostOneExact(const std::vector<std::vector<long>>& a) {
  int n = static_cast<int>(a.size());
  auto scc = stronglyConnected(a);
  for (int v = 0; v < n; ++v) {
    long internal = 0;
    for (int w = 0; w < n; ++w)
      if (scc.comp[w] == scc.comp[v]) internal += a[v][w];
    // a strongly connected block with an edge and all internal row sums 1 is
    // a simple cycle; any internal row sum >= 2 forces radius > 1
    if (internal > 1) return false;
  }
  return true;
}

}  // namespace

SpectralResult spectralRadius(const TransitionMatrix& m, double tol) {
  if (tol <= 0) throw PLMapError("tolerance must be positive");
  int n = m.size();
  for (auto& row : m.entries)
    if (static_cast<int>(row.size()) != n) throw PLMapError("matrix not square");

  SpectralResult res;
  res.at_most_one = radiusAtMostOneExact(m.entries);
  if (n == 0) {
    res.radius = 0.0;
    return res;
  }

  // norm iteration with repeated squaring: ||M^(2^j)||^(1/2^j) -> radius
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = static_cast<double>(m.entries[i][j]);
  auto norm = [&](const std::vector<std::vector<double>>& x) {
    double best = 0;
    for (auto& row : x) {
      double s = 0;
      for (double e : row) s += e;
      best = std::max(best, s);
    }
    return best;
  };
  double log_scale = 0.0;  // log of the accumulated scaling factor
  double pow2 = 1.0;
  double estimate = 0.0;
  bool zero = false;
  for (int it = 0; it < 64; ++it) {
    double s = norm(a);
    if (s == 0.0) {
      zero = true;
      break;
    }
    double t = (log_scale + std::log(s)) / pow2;
    // the sequence converges at rate 1/2 for radius-1 matrices, so stop well
    // below tol: the limit is within twice the last step
    if (it > 4 &&
        std::abs(t - estimate) <= 1e-3 * tol * std::max(1.0, std::abs(t))) {
      estimate = t;
      break;
    }
    estimate = t;
    std::vector<std::vector<double>> b(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        double aik = a[i][k] / s;
        if (aik == 0.0) continue;
        for (int j = 0; j < n; ++j) b[i][j] += aik * (a[k][j] / s);
      }
    a = std::move(b);
    log_scale = 2.0 * (log_scale + std::log(s));
    pow2 *= 2.0;
  }
  res.radius = zero ? 0.0 : std::exp(estimate);
  if (res.at_most_one != (res.radius <= 1.0 + tol))
    throw PLMapError("spectral radius: exact flag and numeric value disagree");
  return res;
}

MapPoint stepPoint(const PLTreeMap& m, const MapPoint& p) {
  if (p.isNode()) return MapPoint::atNode(m.node_image[p.node]);
  const auto& path = m.edge_path[p.edge];
  long length = static_cast<long>(path.size()) - 1;
  if (length <= 0) return MapPoint::atNode(path.front());
  Rational s = p.coord * length;
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  if (denominator(s) == 1) {
    return MapPoint::atNode(path[static_cast<size_t>(numerator(s))]);
  }
  long t = static_cast<long>(numerator(s) / denominator(s));  // floor, s >= 0
  NodeId a = path[t], b = path[t + 1];
  int e = m.domain.edgeIndex(a, b);
  Rational local = s - t;
  if (m.domain.edges()[e].first != a) local = 1 - local;
  return MapPoint::onEdge(e, std::move(local));
}

namespace {

// exact first-return time of a point, up to max_steps; 0 if it never returns
long exactPeriod(const PLTreeMap& m, const MapPoint& start, long max_steps) {
  MapPoint p = start;
  for (long i = 1; i <= max_steps; ++i) {
    p = stepPoint(m, p);
    if (p == start) return i;
  }
  return 0;
}

// affine tracking state along a loop: position on the current edge equals
// alpha * x + beta, with x the start coordinate constrained to [lo, hi]
struct AffineState {
  Rational alpha = 1, beta = 0, lo = 0, hi = 1;
  int edge = -1;

  // descend into slot t (1-based) of the current edge's image path;
  // returns false when infeasible
  bool step(const PLTreeMap& m, int t) {
    const auto& path = m.edge_path[edge];
    long length = static_cast<long>(path.size()) - 1;
    Rational ylo(t - 1, length), yhi(t, length);
    // constrain alpha * x + beta to [ylo, yhi]
    Rational xlo = (ylo - beta) / alpha, xhi = (yhi - beta) / alpha;
    if (alpha < 0) std::swap(xlo, xhi);
    lo = std::max(lo, xlo);
    hi = std::min(hi, xhi);
    if (lo > hi) return false;
    NodeId a = path[t - 1], b = path[t];
    int f = m.domain.edgeIndex(a, b);
    if (m.domain.edges()[f].first == a) {
      alpha *= length;
      beta = beta * length - (t - 1);
    } else {
      alpha *= -length;
      beta = t - beta * length;
    }
    edge = f;
    return true;
  }
};

struct LoopSearch {
  const PLTreeMap& m;
  const std::vector<std::vector<long>>& mat;
  // reach[k][a][b]: a path of exactly k covering steps from edge a to edge b
  std::vector<std::vector<std::vector<char>>> reach;
  long budget = 0;
  long steps_used = 0;

  LoopSearch(const PLTreeMap& map, const std::vector<std::vector<long>>& mt,
             long cutoff)
      : m(map), mat(mt) {
    int n = static_cast<int>(mat.size());
    reach.resize(cutoff + 1,
                 std::vector<std::vector<char>>(n, std::vector<char>(n, 0)));
    for (int a = 0; a < n; ++a) reach[0][a][a] = 1;
    for (long k = 1; k <= cutoff; ++k)
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
          if (mat[a][c] > 0)
            for (int b = 0; b < n; ++b)
              if (reach[k - 1][c][b]) reach[k][a][b] = 1;
  }

  // search for a witness of exact period p along loops anchored at start
  // edges; returns true when found, sets out. budget_hit reports exhaustion.
  bool find(long p, PeriodicWitness& out, bool& budget_hit) {
    int n = static_cast<int>(mat.size());
    std::vector<int> loop;
    for (int s = 0; s < n; ++s) {
      AffineState st;
      st.edge = s;
      loop.clear();
      if (dfs(p, s, 0, st, loop, out)) return true;
      if (steps_used > budget) {
        budget_hit = true;
        return false;
      }
    }
    return false;
  }

private:
  bool dfs(long p, int start, long depth, const AffineState& st,
           std::vector<int>& loop, PeriodicWitness& out) {
    if (depth == p) return trySolve(p, start, st, loop, out);
    const auto& path = m.edge_path[st.edge];
    long length = static_cast<long>(path.size()) - 1;
    for (int t = 1; t <= length; ++t) {
      if (++steps_used > budget) return false;
      NodeId a = path[t - 1], b = path[t];
      int f = m.domain.edgeIndex(a, b);
      if (f < start) continue;  // each loop is anchored at its minimal edge
      if (!reach[p - depth - 1][f][start]) continue;
      AffineState next = st;
      if (!next.step(m, t)) continue;
      loop.push_back(f);
      if (dfs(p, start, depth + 1, next, loop, out)) return true;
      loop.pop_back();
      if (steps_used > budget) return false;
    }
    return false;
  }

  bool trySolve(long p, int start, const AffineState& st,
                const std::vector<int>& loop, PeriodicWitness& out) {
    if (st.edge != start) return false;
    Rational x;
    if (st.alpha == 1) {
      if (st.beta != 0) return false;
      x = (st.lo + st.hi) / 2;  // a whole subinterval of f^p-fixed points
    } else {
      x = st.beta / (1 - st.alpha);
      if (x < st.lo || x > st.hi) return false;
    }
    MapPoint pt;
    if (x == 0)
      pt = MapPoint::atNode(m.domain.edges()[start].first);
    else if (x == 1)
      pt = MapPoint::atNode(m.domain.edges()[start].second);
    else
      pt = MapPoint::onEdge(start, x);
    long d = exactPeriod(m, pt, p);
    if (d != p) return false;
    out = PeriodicWitness{p, loop, pt};
    return true;
  }
};

}  // namespace

PeriodEnumeration enumeratePeriods(const PLTreeMap& m, long cutoff,
                                   long budget) {
  if (cutoff < 1) throw PLMapError("cutoff must be at least 1");
  PeriodEnumeration out;

  // periodic nodes of the functional graph of node images
  int n = m.domain.nodeCount();
  for (NodeId v = 0; v < n; ++v) {
    // walk n steps to land on a cycle, then measure its length
    NodeId w = v;
    for (int i = 0; i < n; ++i) w = m.node_image[w];
    long len = 1;
    NodeId u = m.node_image[w];
    while (u != w) {
      u = m.node_image[u];
      ++len;
    }
    if (len <= cutoff && !out.periods.finite.count(len)) {
      out.periods.finite.insert(len);
      out.witnesses[len] = PeriodicWitness{len, {}, MapPoint::atNode(w)};
    }
  }

  auto mat = transitionMatrix(m).entries;
  LoopSearch search(m, mat, cutoff);
  for (long p = 1; p <= cutoff; ++p) {
    if (out.periods.finite.count(p)) continue;
    search.budget = budget;
    search.steps_used = 0;
    PeriodicWitness w;
    bool budget_hit = false;
    if (search.find(p, w, budget_hit)) {
      out.periods.finite.insert(p);
      out.witnesses[p] = std::move(w);
    } else if (budget_hit) {
      out.budget_exceeded.push_back(p);
    }
  }
  return out;
}

PeriodicWitness findFixedPoint(const PLTreeMap& m) {
  for (NodeId v = 0; v < m.domain.nodeCount(); ++v)
    if (m.node_image[v] == v) return {1, {}, MapPoint::atNode(v)};
  auto res = enumeratePeriods(m, 1);
  auto it = res.witnesses.find(1);
  if (it == res.witnesses.end())
    throw PLMapError("tree self-map without a fixed point: invariant violated");
  return it->second;
}

}  // namespace treedyn
