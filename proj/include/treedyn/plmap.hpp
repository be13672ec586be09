#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "treedyn/forcing.hpp"
#include "treedyn/pattern.hpp"
#include "treedyn/tree.hpp"

namespace treedyn {

using Rational = boost::multiprecision::cpp_rational;

class PLMapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Markov piecewise-linear self-map of a metric tree with unit edge lengths:
/// nodes map to nodes, each edge is traversed monotonically onto the tree
/// path between its endpoint images.
struct PLTreeMap {
  Tree domain;
  std::vector<NodeId> node_image;
  // per edge index: node sequence from image(u) to image(v); a single node
  // when the edge collapses
  std::vector<std::vector<NodeId>> edge_path;

  static PLTreeMap fromNodeImages(Tree domain, std::vector<NodeId> node_image);
};

/// Nonnegative integer covering matrix indexed by domain edges; entry (e, e')
/// counts traversals of e' by the image path of e.
struct TransitionMatrix {
  std::vector<std::vector<long>> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

/// Connect-the-dots model of a pattern: orbit nodes follow the time shift,
/// branch nodes go to an iterated median of the images of the nearest marked
/// node in each incident direction (fixed fold order).
PLTreeMap connectTheDots(const Pattern& p);

TransitionMatrix transitionMatrix(const PLTreeMap& m);

struct SpectralResult {
  double radius = 0.0;
  bool at_most_one = true;  // exact combinatorial flag: radius <= 1
};

/// Perron root to relative tolerance tol (norm iteration with repeated
/// squaring), plus the exact radius<=1 flag: true iff every strongly
/// connected component with an edge is a simple cycle with unit entries.
SpectralResult spectralRadius(const TransitionMatrix& m, double tol);

/// A point of the metric tree: a node, or an interior point of an edge at an
/// exact rational coordinate measured from the edge's first endpoint.
struct MapPoint {
  NodeId node = -1;  // valid when edge < 0
  int edge = -1;
  Rational coord{};  // in (0, 1) when edge >= 0

  bool isNode() const { return edge < 0; }
  bool operator==(const MapPoint& o) const {
    return edge == o.edge && node == o.node && coord == o.coord;
  }
  static MapPoint atNode(NodeId v) { return {v, -1, {}}; }
  static MapPoint onEdge(int e, Rational x) { return {-1, e, std::move(x)}; }
};

/// One exact application of the map.
MapPoint stepPoint(const PLTreeMap& m, const MapPoint& p);

struct PeriodicWitness {
  long period = 0;
  std::vector<int> edge_loop;  // itinerary, empty for node witnesses
  MapPoint point;
};

struct PeriodEnumeration {
  PeriodSet periods;
  std::map<long, PeriodicWitness> witnesses;
  std::vector<long> budget_exceeded;  // periods left undecided
};

/// Decides, for every p <= cutoff, whether the map has a point of exact
/// period p: periodic nodes directly, interior points by solving the affine
/// fixed-point equation along loops of the Markov graph in exact rational
/// arithmetic. Every witness re-verifies by exact iteration. Loop search is
/// bounded by `budget` DFS steps per period; overruns are reported, never
/// silently dropped.
PeriodEnumeration enumeratePeriods(const PLTreeMap& m, long cutoff,
                                   long budget = 5'000'000);

/// One exact fixed point; throws PLMapError if none exists (that would
/// violate the fixed-point lemma for tree maps).
PeriodicWitness findFixedPoint(const PLTreeMap& m);

}  // namespace treedyn
