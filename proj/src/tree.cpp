#include "treedyn/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace treedyn {

Tree::Tree(int node_count, std::vector<std::pair<NodeId, NodeId>> edges,
           std::vector<std::string> labels)
    : adj_(node_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (node_count < 1) throw TreeError("tree needs at least one node");
  if (static_cast<int>(edges_.size()) != node_count - 1)
    throw TreeError("tree must have exactly nodes-1 edges");
  if (labels_.empty()) {
    labels_.reserve(node_count);
    for (int i = 0; i < node_count; ++i) labels_.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != node_count)
    throw TreeError("label count mismatch");

  std::set<std::pair<NodeId, NodeId>> seen;
  for (auto& [a, b] : edges_) {
    if (a < 0 || a >= node_count || b < 0 || b >= node_count)
      throw TreeError("edge references unknown node");
    if (a == b) throw TreeError("self-loop");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw TreeError("duplicate edge");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

  // edge count + acyclicity leave only connectivity to check
  std::vector<char> vis(node_count, 0);
  std::queue<NodeId> q;
  q.push(0);
  vis[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop();
    for (NodeId w : adj_[v])
      if (!vis[w]) {
        vis[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  if (reached != node_count) throw TreeError("tree is not connected");
}

void Tree::checkNode(NodeId v) const {
  if (!hasNode(v)) throw TreeError("unknown node identifier");
}

const std::vector<NodeId>& Tree::neighbors(NodeId v) const {
  checkNode(v);
  return adj_[v];
}

int Tree::degree(NodeId v) const {
  checkNode(v);
  return static_cast<int>(adj_[v].size());
}

const std::string& Tree::label(NodeId v) const {
  checkNode(v);
  return labels_[v];
}

std::optional<NodeId> Tree::nodeByLabel(const std::string& name) const {
  for (int i = 0; i < nodeCount(); ++i)
    if (labels_[i] == name) return i;
  return std::nullopt;
}

int Tree::edgeIndex(NodeId a, NodeId b) const {
  for (int i = 0; i < edgeCount(); ++i) {
    auto [u, v] = edges_[i];
    if ((u == a && v == b) || (u == b && v == a)) return i;
  }
  return -1;
}

std::vector<NodeId> Tree::path(NodeId a, NodeId b) const {
  checkNode(a);
  checkNode(b);
  std::vector<NodeId> parent(nodeCount(), -1);
  std::queue<NodeId> q;
  q.push(a);
  parent[a] = a;
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop();
    if (v == b) break;
    for (NodeId w : adj_[v])
      if (parent[w] < 0) {
        parent[w] = v;
        q.push(w);
      }
  }
  std::vector<NodeId> out;
  for (NodeId v = b;; v = parent[v]) {
    out.push_back(v);
    if (v == a) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

NodeId Tree::median(NodeId a, NodeId b, NodeId c) const {
  auto pab = path(a, b);
  std::vector<char> on(nodeCount(), 0);
  for (NodeId v : pab) on[v] = 1;
  NodeId m = a;
  for (NodeId v : path(a, c)) {
    if (on[v]) m = v;
    else break;
  }
  return m;
}

std::vector<NodeId> Tree::hull(const std::vector<NodeId>& points) const {
  if (points.empty()) throw TreeError("hull of empty point set");
  std::vector<char> marked(nodeCount(), 0);
  for (NodeId v : points) {
    checkNode(v);
    marked[v] = 1;
  }
  // prune unmarked leaves repeatedly; what remains is the Steiner hull
  std::vector<int> deg(nodeCount());
  for (int v = 0; v < nodeCount(); ++v) deg[v] = degree(v);
  std::vector<char> removed(nodeCount(), 0);
  std::queue<NodeId> q;
  for (int v = 0; v < nodeCount(); ++v)
    if (deg[v] <= 1 && !marked[v]) q.push(v);
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop();
    if (removed[v] || marked[v] || deg[v] > 1) continue;
    removed[v] = 1;
    for (NodeId w : adj_[v])
      if (!removed[w]) {
        --deg[w];
        if (deg[w] <= 1 && !marked[w]) q.push(w);
      }
  }
  std::vector<NodeId> out;
  for (int v = 0; v < nodeCount(); ++v)
    if (!removed[v]) out.push_back(v);
  return out;
}

ReducedShape Tree::reduce() const {
  if (nodeCount() < 2) return {0, 0, true};
  ReducedShape shape;
  int deg2 = 0;
  for (int v = 0; v < nodeCount(); ++v) {
    int d = degree(v);
    if (d == 1) ++shape.end_count;
    if (d == 2) ++deg2;
  }
  // each degree-2 suppression merges two edges into one
  shape.edge_count = edgeCount() - deg2;
  return shape;
}

Subtree::Subtree(const Tree& parent, std::vector<NodeId> nodes)
    : parent_(&parent), nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw TreeError("empty subtree");
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  std::vector<char> in(parent.nodeCount(), 0);
  for (NodeId v : nodes_) {
    if (!parent.hasNode(v)) throw TreeError("subtree node not in parent");
    in[v] = 1;
  }
  // connectivity of the induced subgraph
  std::vector<char> vis(parent.nodeCount(), 0);
  std::queue<NodeId> q;
  q.push(nodes_[0]);
  vis[nodes_[0]] = 1;
  size_t reached = 1;
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop();
    for (NodeId w : parent.neighbors(v))
      if (in[w] && !vis[w]) {
        vis[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  if (reached != nodes_.size()) throw TreeError("subtree is not connected");
}

bool Subtree::contains(NodeId v) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<DifferenceComponent> differenceComponents(
    const Tree& tree, const std::vector<Subtree>& blocks) {
  if (blocks.empty()) throw TreeError("no blocks");
  std::vector<int> block_of(tree.nodeCount(), -1);
  std::vector<NodeId> all;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (&blocks[i].parent() != &tree)
      throw TreeError("block belongs to another tree");
    for (NodeId v : blocks[i].nodes()) {
      if (block_of[v] >= 0) throw TreeError("blocks overlap");
      block_of[v] = static_cast<int>(i);
      all.push_back(v);
    }
  }
  auto hull_nodes = tree.hull(all);
  std::vector<char> in_hull(tree.nodeCount(), 0);
  for (NodeId v : hull_nodes) in_hull[v] = 1;

  // atoms: one per residual hull node, plus one per block-to-block hull edge
  int n = tree.nodeCount();
  int atoms = n;
  std::vector<int> arc_atom(tree.edgeCount(), -1);
  std::vector<std::pair<NodeId, NodeId>> arc_edges;
  for (int e = 0; e < tree.edgeCount(); ++e) {
    auto [u, v] = tree.edges()[e];
    if (!in_hull[u] || !in_hull[v]) continue;
    int bu = block_of[u], bv = block_of[v];
    if (bu >= 0 && bv >= 0 && bu != bv) {
      arc_atom[e] = atoms++;
      arc_edges.push_back({u, v});
    }
  }
  UnionFind uf(atoms);
  std::vector<std::vector<std::pair<NodeId, NodeId>>> stub(n);
  for (int e = 0; e < tree.edgeCount(); ++e) {
    auto [u, v] = tree.edges()[e];
    if (!in_hull[u] || !in_hull[v]) continue;
    int bu = block_of[u], bv = block_of[v];
    if (bu < 0 && bv < 0) {
      uf.unite(u, v);
    } else if (bu < 0 && bv >= 0) {
      stub[u].push_back({u, v});
    } else if (bu >= 0 && bv < 0) {
      stub[v].push_back({v, u});
    }
  }

  std::map<int, DifferenceComponent> comps;
  for (NodeId v : hull_nodes) {
    if (block_of[v] >= 0) continue;
    auto& c = comps[uf.find(v)];
    c.nodes.push_back(v);
    for (auto& s : stub[v]) c.arcs.push_back(s);
  }
  for (int e = 0; e < tree.edgeCount(); ++e)
    if (arc_atom[e] >= 0)
      comps[uf.find(arc_atom[e])].arcs.push_back(tree.edges()[e]);

  std::vector<DifferenceComponent> out;
  for (auto& [root, c] : comps) {
    std::sort(c.nodes.begin(), c.nodes.end());
    out.push_back(std::move(c));
  }
  return out;
}

bool isSurrounding(const Tree& tree, const std::vector<Subtree>& blocks) {
  if (blocks.empty()) throw TreeError("no blocks");
  if (blocks.size() == 1) return true;  // degenerate convention
  return differenceComponents(tree, blocks).size() == 1;
}

}  // namespace treedyn
