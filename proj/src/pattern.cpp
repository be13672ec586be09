#include "treedyn/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace treedyn {

Pattern Pattern::validate(const Tree& tree, const std::vector<NodeId>& orbit) {
  if (orbit.empty()) throw PatternError("orbit is empty");
  std::set<NodeId> seen;
  for (NodeId v : orbit) {
    if (!tree.hasNode(v)) throw PatternError("orbit node missing from tree");
    if (!seen.insert(v).second) throw PatternError("repeated orbit node");
  }

  auto hull_nodes = tree.hull(orbit);
  std::vector<char> keep(tree.nodeCount(), 0);
  for (NodeId v : hull_nodes) keep[v] = 1;
  std::vector<char> marked(tree.nodeCount(), 0);
  for (NodeId v : orbit) marked[v] = 1;

  // adjacency restricted to the hull, then suppress unmarked degree-2 nodes
  std::map<NodeId, std::set<NodeId>> adj;
  for (auto& [a, b] : tree.edges())
    if (keep[a] && keep[b]) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
  if (hull_nodes.size() == 1) adj[hull_nodes[0]];

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end(); ++it) {
      NodeId v = it->first;
      if (marked[v] || it->second.size() != 2) continue;
      auto nb = it->second.begin();
      NodeId a = *nb, b = *std::next(nb);
      adj[a].erase(v);
      adj[b].erase(v);
      adj[a].insert(b);
      adj[b].insert(a);
      adj.erase(it);
      changed = true;
      break;
    }
  }

  // rebuild a compact tree
  std::map<NodeId, NodeId> remap;
  std::vector<std::string> labels;
  for (auto& [v, nbrs] : adj) {
    remap[v] = static_cast<NodeId>(labels.size());
    labels.push_back(tree.label(v));
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (auto& [v, nbrs] : adj)
    for (NodeId w : nbrs)
      if (v < w) edges.push_back({remap[v], remap[w]});
  int node_count = static_cast<int>(labels.size());
  Tree out(node_count, std::move(edges), std::move(labels));
  std::vector<NodeId> new_orbit;
  for (NodeId v : orbit) new_orbit.push_back(remap.at(v));
  return Pattern(std::move(out), std::move(new_orbit));
}

Pattern::Pattern(Tree tree, std::vector<NodeId> orbit)
    : tree_(std::move(tree)), orbit_(std::move(orbit)),
      time_index_(tree_.nodeCount(), -1) {
  for (size_t i = 0; i < orbit_.size(); ++i)
    time_index_[orbit_[i]] = static_cast<int>(i);
}

NodeId Pattern::theta(NodeId v) const {
  int i = timeIndex(v);
  if (i < 0) throw PatternError("theta of non-orbit node");
  return orbit_[(i + 1) % orbit_.size()];
}

int Pattern::timeIndex(NodeId v) const {
  if (!tree_.hasNode(v)) throw PatternError("unknown node");
  return time_index_[v];
}

std::vector<std::pair<NodeId, NodeId>> Pattern::neighboringPairs() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (size_t i = 0; i < orbit_.size(); ++i)
    for (size_t j = i + 1; j < orbit_.size(); ++j) {
      NodeId a = orbit_[i], b = orbit_[j];
      auto p = tree_.path(a, b);
      bool clear = true;
      for (size_t t = 1; t + 1 < p.size(); ++t)
        if (time_index_[p[t]] >= 0) {
          clear = false;
          break;
        }
      if (clear) out.push_back({std::min(a, b), std::max(a, b)});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Block> Pattern::blocks(int m) const {
  int n = period();
  if (m < 1 || m > n || n % m != 0)
    throw PatternError("modulus must divide the period");
  std::vector<Block> out(m);
  for (int r = 0; r < m; ++r) {
    out[r].residue = r;
    out[r].modulus = m;
    for (int s = r; s < n; s += m) out[r].nodes.push_back(orbit_[s]);
    std::sort(out[r].nodes.begin(), out[r].nodes.end());
  }
  return out;
}

}  // namespace treedyn
