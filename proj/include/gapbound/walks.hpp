#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gapbound/graph.hpp"

namespace gapbound {

/// Hamiltonian walk identified by its multiplicity vector. Only positive
/// multiplicities are stored; each lies in {1, 2}.
class Walk {
 public:
  Walk() = default;
  explicit Walk(const std::map<Edge, int>& multiplicities);

  int at(const Edge& e) const;
  const std::map<Edge, int>& multiplicities() const { return mult_; }
  /// Sum of c_e w_e over the stored edges; c is looked up in `costs`.
  Rational cost(const WeightedGraph& costs) const;

  friend auto operator<=>(const Walk&, const Walk&) = default;
  friend bool operator==(const Walk&, const Walk&) = default;

 private:
  std::map<Edge, int> mult_;
};

enum class WalkDefect { None, OffGraph, Multiplicity, OddDegree, Uncovered, Disconnected };

struct WalkCheck {
  bool valid = false;
  WalkDefect defect = WalkDefect::None;
  std::vector<Node> witness;
  std::string message;
};

/// Even degree at every node, every node covered, positive part connected,
/// all edges on g, multiplicities in {0, 1, 2}.
WalkCheck is_valid_walk(const WeightedGraph& g, const Walk& w);
WalkCheck is_valid_walk(const SepPoint& x, const Walk& w);

inline constexpr std::size_t kMaxEnumerationEdges = 14;

/// All walks on g in lexicographic order of the multiplicity vector taken in
/// edge order. Throws EdgeCountTooLarge above kMaxEnumerationEdges edges.
std::vector<Walk> enumerate_walks(const WeightedGraph& g);

struct PricedWalk {
  Walk walk;
  Rational cost;
};

inline constexpr int kMaxHeldKarpWalkNodes = 18;

/// Minimum of sum c_e w_e over walks on g, where c_e is the label of e in g.
/// Held-Karp on the shortest-path closure; each closure edge is replaced by
/// its shortest path and multiplicities above 2 lose two copies.
PricedWalk min_cost_walk(const WeightedGraph& g);

/// Every edge of a minimum spanning tree of g twice.
Walk doubled_tree_walk(const WeightedGraph& g);

/// Transfers w from a graph on n nodes to the graph in which the 1-edge e
/// has been replaced by the path e.u, n, ..., n+d-1, e.v. m must equal w_e.
/// m = 1 and m = 2 route the passes along the path; m = 0 doubles every
/// path edge except the k-th one (0 <= k <= d), which is left unused.
Walk extend_walk(const Walk& w, int n, const Edge& e, int d, int m, int k = 0);

}  // namespace gapbound
