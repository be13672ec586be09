#pragma once

#include <stdexcept>
#include <vector>

#include "treedyn/tree.hpp"

namespace treedyn {

class PatternError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Residue class of orbit points modulo m: { A_s : s = r (mod m) }.
struct Block {
  int residue = 0;
  int modulus = 1;
  std::vector<NodeId> nodes;  // sorted
};

/// A periodic-orbit pattern: a marked tree whose marked nodes carry a cyclic
/// time order. Always stored normalized: the tree is the connected hull of
/// the orbit and every non-orbit node has degree >= 3.
class Pattern {
public:
  /// Normalizes raw input (prunes nodes outside the hull, suppresses
  /// degree-2 non-orbit nodes) or throws PatternError.
  static Pattern validate(const Tree& tree, const std::vector<NodeId>& orbit);

  const Tree& tree() const { return tree_; }
  const std::vector<NodeId>& orbit() const { return orbit_; }
  int period() const { return static_cast<int>(orbit_.size()); }

  /// Time shift: image of an orbit node under the cyclic permutation.
  NodeId theta(NodeId v) const;
  /// Position of v in the orbit sequence, or -1 for non-orbit nodes.
  int timeIndex(NodeId v) const;

  /// Unordered pairs of orbit nodes with no orbit node strictly between.
  std::vector<std::pair<NodeId, NodeId>> neighboringPairs() const;

  /// The m residue-class blocks; m must divide the period.
  std::vector<Block> blocks(int m) const;

private:
  Pattern(Tree tree, std::vector<NodeId> orbit);

  Tree tree_;
  std::vector<NodeId> orbit_;
  std::vector<int> time_index_;  // per node, -1 if unmarked
};

}  // namespace treedyn
