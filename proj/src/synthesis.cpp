#include "treedyn/synthesis.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace treedyn {

namespace {

/// Mutable tree under construction; node ids are stable, new nodes appended.
class TreeBuilder {
public:
  explicit TreeBuilder(const Tree& t) {
    adj_.resize(t.nodeCount());
    for (NodeId v = 0; v < t.nodeCount(); ++v) labels_.push_back(t.label(v));
    for (auto& [a, b] : t.edges()) {
      adj_[a].insert(b);
      adj_[b].insert(a);
    }
  }

  int size() const { return static_cast<int>(adj_.size()); }

  NodeId addNode(std::string label) {
    adj_.emplace_back();
    labels_.push_back(std::move(label));
    return size() - 1;
  }

  void addEdge(NodeId a, NodeId b) {
    adj_[a].insert(b);
    adj_[b].insert(a);
  }

  void removeEdge(NodeId a, NodeId b) {
    adj_[a].erase(b);
    adj_[b].erase(a);
  }

  bool hasEdge(NodeId a, NodeId b) const { return adj_[a].count(b) > 0; }

  NodeId subdivide(NodeId a, NodeId b, std::string label) {
    removeEdge(a, b);
    NodeId m = addNode(std::move(label));
    addEdge(a, m);
    addEdge(m, b);
    return m;
  }

  const std::set<NodeId>& adj(NodeId v) const { return adj_[v]; }

  // connected hull by pruning unmarked leaves
  std::vector<NodeId> hull(const std::vector<NodeId>& points) const {
    std::vector<char> marked(size(), 0), removed(size(), 0);
    for (NodeId v : points) marked[v] = 1;
    std::vector<int> deg(size());
    for (int v = 0; v < size(); ++v) deg[v] = static_cast<int>(adj_[v].size());
    std::queue<NodeId> q;
    for (int v = 0; v < size(); ++v)
      if (deg[v] <= 1 && !marked[v]) q.push(v);
    while (!q.empty()) {
      NodeId v = q.front();
      q.pop();
      if (removed[v] || marked[v] || deg[v] > 1) continue;
      removed[v] = 1;
      for (NodeId w : adj_[v])
        if (!removed[w] && --deg[w] <= 1 && !marked[w]) q.push(w);
    }
    std::vector<NodeId> out;
    for (int v = 0; v < size(); ++v)
      if (!removed[v]) out.push_back(v);
    return out;
  }

  Tree freeze() const {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int v = 0; v < size(); ++v)
      for (NodeId w : adj_[v])
        if (v < w) edges.push_back({v, w});
    return Tree(size(), std::move(edges), labels_);
  }

private:
  std::vector<std::set<NodeId>> adj_;
  std::vector<std::string> labels_;
};

/// Interval realizer as a node map on a path 0..K, plus a node lying on a
/// cycle whose period doubles with every doubling step.
struct IntervalRealizer {
  std::vector<int> g;
  int designated = 0;
};

IntervalRealizer stefanBase(long m) {
  // spatial zigzag from the center; the classical cycle with period set S(m)
  long k = (m - 1) / 2;
  std::vector<long> seq{k};
  for (long j = 1; j < m; ++j)
    seq.push_back(j % 2 == 1 ? k + (j + 1) / 2 : k - j / 2);
  std::vector<int> sigma(m);
  for (long i = 0; i < m; ++i)
    sigma[seq[i]] = static_cast<int>(seq[(i + 1) % m]);
  IntervalRealizer r;
  r.g.resize(m + 2);
  r.g[0] = 0;
  r.g[m + 1] = static_cast<int>(m + 1);
  for (long i = 0; i < m; ++i) r.g[i + 1] = sigma[i] + 1;
  r.designated = static_cast<int>(k + 1);
  return r;
}

IntervalRealizer doubleRealizer(const IntervalRealizer& base) {
  int K = static_cast<int>(base.g.size()) - 1;
  IntervalRealizer r;
  r.g.resize(2 * K + 2);
  for (int i = 0; i <= K; ++i) r.g[i] = K + 1 + i;      // left block -> right
  for (int j = 0; j <= K; ++j) r.g[K + 1 + j] = base.g[j];  // right -> g(left)
  r.designated = base.designated;
  return r;
}

IntervalRealizer collar(const IntervalRealizer& base) {
  int K = static_cast<int>(base.g.size()) - 1;
  IntervalRealizer r;
  r.g.resize(K + 3);
  r.g[0] = 0;
  r.g[K + 2] = K + 2;
  for (int i = 0; i <= K; ++i) r.g[i + 1] = base.g[i] + 1;
  r.designated = base.designated + 1;
  return r;
}

IntervalRealizer intervalRealizer(long key) {
  if (key < 1) throw SynthesisError("Sharkovskii key must be positive");
  long odd = key;
  int doublings = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++doublings;
  }
  IntervalRealizer r =
      odd == 1 ? IntervalRealizer{{0, 1}, 0} : stefanBase(odd);
  for (int s = 0; s < doublings; ++s) r = doubleRealizer(r);
  if (doublings > 0) r = collar(r);  // restore fixed endpoints
  return r;
}

Tree pathTree(int node_count) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 0; i + 1 < node_count; ++i) edges.push_back({i, i + 1});
  return Tree(node_count, std::move(edges));
}

std::vector<NodeId> leaves(const Tree& t) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < t.nodeCount(); ++v)
    if (t.degree(v) == 1) out.push_back(v);
  return out;
}

}  // namespace

std::set<long> SynthesizedMap::declaredUpTo(long cutoff) const {
  std::set<long> out;
  for (long p = 1; p <= cutoff; ++p)
    if (declared_period(p)) out.insert(p);
  return out;
}

SynthVerification verifySynthesized(const SynthesizedMap& s, long cutoff,
                                    double tol, long budget) {
  SynthVerification v;
  v.expected = s.declaredUpTo(cutoff);
  auto res = enumeratePeriods(s.map, cutoff, budget);
  v.found = res.periods.finite;
  v.budget_exceeded = res.budget_exceeded;
  auto spectral = spectralRadius(transitionMatrix(s.map), tol);
  v.radius = spectral.radius;
  v.radius_flag_ok = !s.declared_entropy_zero || spectral.at_most_one;
  v.periods_ok = v.found == v.expected && v.budget_exceeded.empty();
  v.ok = v.radius_flag_ok && v.periods_ok;
  return v;
}

PLTreeMap realizeInterval(long key) {
  auto r = intervalRealizer(key);
  std::vector<NodeId> image(r.g.begin(), r.g.end());
  return PLTreeMap::fromNodeImages(pathTree(static_cast<int>(r.g.size())),
                                   std::move(image));
}

namespace {

SynthesizedMap synthPeriodSetImpl(const Tree& ambient, int n,
                                  SharkovskiiKey key, NodeId* designated_out) {
  if (key.kind != SharkovskiiKey::Kind::Finite)
    throw SynthesisError("only finite Sharkovskii keys can be realized");
  if (n < 1) throw SynthesisError("need n >= 1");
  auto zs = leaves(ambient);
  if (static_cast<int>(zs.size()) < n || ambient.nodeCount() < 2)
    throw SynthesisError("n exceeds the endpoint count of the tree");
  zs.resize(n);

  auto realizer = intervalRealizer(key.value);
  int K = static_cast<int>(realizer.g.size()) - 1;

  TreeBuilder builder(ambient);
  // spike i: w -- y_i -- s_{i,0} -- ... -- s_{i,K-1} -- z_i, with s_{i,K}=z_i
  std::vector<std::vector<NodeId>> seg(n);
  for (int i = 0; i < n; ++i) {
    NodeId z = zs[i];
    NodeId w = *builder.adj(z).begin();
    builder.removeEdge(z, w);
    std::string tag = std::to_string(i);
    NodeId y = builder.addNode("y" + tag);
    builder.addEdge(w, y);
    NodeId prev = y;
    for (int j = 0; j < K; ++j) {
      NodeId s = builder.addNode("s" + tag + "." + std::to_string(j));
      builder.addEdge(prev, s);
      seg[i].push_back(s);
      prev = s;
    }
    builder.addEdge(prev, z);
    seg[i].push_back(z);  // s_{i,K}
  }

  Tree domain = builder.freeze();
  std::vector<NodeId> image(domain.nodeCount());
  for (NodeId v = 0; v < domain.nodeCount(); ++v) image[v] = v;  // identity
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= K; ++j)
      image[seg[i][j]] =
          i + 1 < n ? seg[i + 1][j] : seg[0][realizer.g[j]];

  if (designated_out) *designated_out = seg[0][realizer.designated];

  long k = key.value;
  SynthesizedMap out{
      PLTreeMap::fromNodeImages(std::move(domain), std::move(image)),
      [n, key](long p) {
        return p == 1 || (p % n == 0 && inSharkovskiiTail(key, p / n));
      },
      "{1} u " + std::to_string(n) + "*S(" + std::to_string(k) + ")",
      (k & (k - 1)) == 0};  // zero entropy exactly for S(2^s)
  return out;
}

}  // namespace

SynthesizedMap synthPeriodSet(const Tree& ambient, int n, SharkovskiiKey key) {
  return synthPeriodSetImpl(ambient, n, key, nullptr);
}

SynthesizedMap synthSnowflakeMap(const Tree& ambient,
                                 const std::vector<NodeId>& orbit) {
  Pattern p = Pattern::validate(ambient, orbit);
  auto chain = decompose(p);
  if (!chain) throw SynthesisError("pattern is not a snowflake");
  const auto& levels = chain->levels;
  int N = p.period();
  int k = static_cast<int>(levels.size()) - 1;

  TreeBuilder builder(ambient);
  std::set<NodeId> is_orbit(orbit.begin(), orbit.end());
  // region of each non-orbit hull node: (level index i, residue r mod m_{i-1})
  std::map<NodeId, std::pair<int, int>> region;
  std::vector<std::vector<NodeId>> y(k + 1);

  for (int i = 1; i <= k; ++i) {
    int mi = levels[i], mprev = levels[i - 1];
    y[i].resize(mprev, -1);
    for (int r = 0; r < mprev; ++r) {
      std::vector<NodeId> parent_pts;
      for (int s = r; s < N; s += mprev) parent_pts.push_back(orbit[s]);
      auto parent_nodes = builder.hull(parent_pts);
      std::set<NodeId> parent(parent_nodes.begin(), parent_nodes.end());

      std::map<NodeId, int> child_of;
      std::vector<std::vector<NodeId>> children;
      for (int s = r; s < mi; s += mprev) {
        std::vector<NodeId> pts;
        for (int u = s; u < N; u += mi) pts.push_back(orbit[u]);
        auto nodes = builder.hull(pts);
        for (NodeId v : nodes) child_of[v] = s;
        children.push_back(std::move(nodes));
      }

      std::vector<NodeId> residual;
      for (NodeId v : parent)
        if (!child_of.count(v)) {
          if (is_orbit.count(v))
            throw SynthesisError("orbit node in a snowflake gap");
          region[v] = {i, r};
          residual.push_back(v);
        }

      // one funnel node per child, on its unique attachment edge
      for (auto& child : children) {
        int s = child_of.at(child.front());
        std::pair<NodeId, NodeId> attach{-1, -1};
        int found = 0;
        for (NodeId z : child)
          for (NodeId w : builder.adj(z)) {
            if (!parent.count(w)) continue;
            auto it = child_of.find(w);
            if (it != child_of.end() && it->second == s) continue;
            attach = {z, w};
            ++found;
          }
        if (found != 1)
          throw SynthesisError("snowflake region has no unique attachment");
        NodeId x = builder.subdivide(attach.first, attach.second,
                                     "x" + std::to_string(i) + "." +
                                         std::to_string(s));
        parent.insert(x);
        region[x] = {i, r};
      }

      if (!residual.empty()) {
        y[i][r] = *std::min_element(residual.begin(), residual.end());
      } else {
        // gap is a bare arc between two funnel nodes: insert the collapse
        // target in its middle
        std::pair<NodeId, NodeId> inner{-1, -1};
        for (NodeId v : parent) {
          if (!region.count(v) || region[v] != std::make_pair(i, r)) continue;
          for (NodeId w : builder.adj(v))
            if (v < w && region.count(w) && region[w] == std::make_pair(i, r))
              inner = {v, w};
        }
        if (inner.first < 0)
          throw SynthesisError("snowflake gap without interior edge");
        NodeId yy = builder.subdivide(inner.first, inner.second,
                                      "yy" + std::to_string(i) + "." +
                                          std::to_string(r));
        region[yy] = {i, r};
        y[i][r] = yy;
      }
    }
  }

  Tree domain = builder.freeze();
  std::vector<NodeId> image(domain.nodeCount(), -1);
  for (int t = 0; t < N; ++t) image[orbit[t]] = orbit[(t + 1) % N];
  for (auto& [v, reg] : region) {
    auto [i, r] = reg;
    image[v] = y[i][(r + 1) % levels[i - 1]];
  }
  // everything outside the orbit hull retracts onto its gate node
  auto hull0 = builder.hull(std::vector<NodeId>(orbit.begin(), orbit.end()));
  std::vector<char> in_hull(domain.nodeCount(), 0);
  for (NodeId v : hull0) in_hull[v] = 1;
  for (NodeId v = 0; v < domain.nodeCount(); ++v) {
    if (image[v] >= 0) continue;
    if (in_hull[v])
      throw SynthesisError("hull node escaped region assignment");
    NodeId gate = v;
    std::vector<NodeId> walk{v};
    std::vector<char> vis(domain.nodeCount(), 0);
    vis[v] = 1;
    std::queue<NodeId> q;
    q.push(v);
    while (!q.empty()) {
      NodeId u = q.front();
      q.pop();
      if (in_hull[u]) {
        gate = u;
        break;
      }
      for (NodeId w : domain.neighbors(u))
        if (!vis[w]) {
          vis[w] = 1;
          q.push(w);
        }
    }
    image[v] = image[gate] >= 0 ? image[gate] : gate;
  }

  std::set<long> declared(levels.begin(), levels.end());
  declared.insert(1);
  std::string desc = "{";
  for (long q : declared) desc += (desc.size() > 1 ? "," : "") + std::to_string(q);
  SynthesizedMap out{
      PLTreeMap::fromNodeImages(std::move(domain), std::move(image)),
      [declared](long q) { return declared.count(q) > 0; }, desc + "}", true};
  return out;
}

SynthesizedMap synthSnowflakeMap(const Pattern& p) {
  return synthSnowflakeMap(p.tree(), p.orbit());
}

Prop3Result synthProp3(const Tree& ambient, int m, int k) {
  if (m < 1 || k < 0 || k > 24) throw SynthesisError("bad prop3 parameters");
  NodeId designated = -1;
  auto s = synthPeriodSetImpl(ambient, m, SharkovskiiKey::finite(1L << k),
                              &designated);
  std::vector<NodeId> orbit{designated};
  NodeId v = s.map.node_image[designated];
  while (v != designated) {
    orbit.push_back(v);
    v = s.map.node_image[v];
  }
  if (static_cast<long>(orbit.size()) != static_cast<long>(m) << k)
    throw SynthesisError("prop3 orbit has unexpected period");
  return Prop3Result{std::move(s), std::move(orbit)};
}

}  // namespace treedyn
