#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treedyn {

using NodeId = int;

class TreeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Endpoint/edge counts in the branched-manifold sense: degree-2 nodes are
/// suppressed before counting.
struct ReducedShape {
  int end_count = 0;
  int edge_count = 0;
  bool degenerate = false;  // single-node tree

  friend bool operator==(const ReducedShape&, const ReducedShape&) = default;
};

/// Finite combinatorial tree. Immutable after construction; all operations
/// are pure.
class Tree {
public:
  Tree(int node_count, std::vector<std::pair<NodeId, NodeId>> edges,
       std::vector<std::string> labels = {});

  int nodeCount() const { return static_cast<int>(adj_.size()); }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
  const std::vector<NodeId>& neighbors(NodeId v) const;
  int degree(NodeId v) const;
  const std::string& label(NodeId v) const;
  std::optional<NodeId> nodeByLabel(const std::string& name) const;
  bool hasNode(NodeId v) const { return v >= 0 && v < nodeCount(); }

  /// Index into edges() of the edge {a, b}, or -1 if absent.
  int edgeIndex(NodeId a, NodeId b) const;

  /// Node sequence from a to b, inclusive.
  std::vector<NodeId> path(NodeId a, NodeId b) const;

  /// The unique node lying on all three pairwise paths.
  NodeId median(NodeId a, NodeId b, NodeId c) const;

  /// Connected hull: smallest connected node set containing points.
  /// Returned sorted ascending. Throws on an empty point set or unknown node.
  std::vector<NodeId> hull(const std::vector<NodeId>& points) const;

  ReducedShape reduce() const;

private:
  void checkNode(NodeId v) const;

  std::vector<std::vector<NodeId>> adj_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::vector<std::string> labels_;
};

/// Vertex-induced connected subgraph of a parent tree.
class Subtree {
public:
  Subtree(const Tree& parent, std::vector<NodeId> nodes);

  const Tree& parent() const { return *parent_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }  // sorted
  bool contains(NodeId v) const;

private:
  const Tree* parent_;
  std::vector<NodeId> nodes_;
};

/// One connected piece of hull(union of blocks) minus the blocks.
struct DifferenceComponent {
  std::vector<NodeId> nodes;                    // residual hull nodes, sorted
  std::vector<std::pair<NodeId, NodeId>> arcs;  // hull edges meeting a block
};

/// Components of [Z] \ Z for Z the union of pairwise disjoint blocks.
/// An edge whose endpoints lie in two distinct blocks contributes an open-arc
/// component; an edge stub from a block to a residual node merges into that
/// node's component.
std::vector<DifferenceComponent> differenceComponents(
    const Tree& tree, const std::vector<Subtree>& blocks);

/// True iff the difference is a single component. A single block is
/// surrounding by convention (empty difference counts as connected).
bool isSurrounding(const Tree& tree, const std::vector<Subtree>& blocks);

}  // namespace treedyn
