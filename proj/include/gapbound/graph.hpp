#pragma once

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gapbound/rational.hpp"

namespace gapbound {

using Node = int;

/// Undirected edge of K_n, always stored with u < v.
struct Edge {
  Node u = 0;
  Node v = 1;

  Edge() = default;
  Edge(Node a, Node b);

  bool has(Node x) const { return u == x || v == x; }
  Node other(Node x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with one rational label per edge. The label is a
/// SEP weight for support graphs and a cost everywhere else.
struct WeightedGraph {
  int n = 0;
  std::vector<std::pair<Edge, Rational>> edges;  // sorted by edge, no duplicates

  WeightedGraph() = default;
  WeightedGraph(int node_count, std::vector<std::pair<Edge, Rational>> edge_list);

  std::size_t edge_count() const { return edges.size(); }
  std::optional<std::size_t> index_of(const Edge& e) const;
  /// adjacency[v] lists (neighbour, edge index)
  std::vector<std::vector<std::pair<Node, std::size_t>>> adjacency() const;
  bool is_connected() const;
};

/// A point of the subtour-elimination polytope: sparse weights on the edges
/// of K_n. Only strictly positive weights are stored and each lies in (0, 1].
class SepPoint {
 public:
  SepPoint() = default;
  /// Zero weights are dropped; anything outside [0, 1] throws.
  SepPoint(int n, const std::vector<std::pair<Edge, Rational>>& weights);

  int n() const { return n_; }
  const std::map<Edge, Rational>& weights() const { return weights_; }
  Rational weight(const Edge& e) const;
  std::size_t edge_count() const { return weights_.size(); }
  bool is_integral() const;
  std::vector<Edge> one_edges() const;
  std::vector<int> support_degrees() const;

  friend bool operator==(const SepPoint&, const SepPoint&) = default;

 private:
  int n_ = 0;
  std::map<Edge, Rational> weights_;
};

/// Maximal path of 1-edges. nodes.front() < nodes.back().
struct OnePath {
  std::vector<Node> nodes;

  Node front() const { return nodes.front(); }
  Node back() const { return nodes.back(); }
  std::vector<Node> internal_nodes() const;
  std::size_t edge_count() const { return nodes.size() - 1; }
};

struct CanonicalEdge {
  Node u;
  Node v;
  Rational weight;
};

/// Edge list of a weighted graph under its lexicographically smallest
/// labeling. Equal forms <=> isomorphic weighted graphs.
struct CanonicalForm {
  int n = 0;
  std::vector<CanonicalEdge> edges;
};

bool operator==(const CanonicalForm& a, const CanonicalForm& b);
bool operator<(const CanonicalForm& a, const CanonicalForm& b);

struct CanonicalLabeling {
  std::vector<Node> label;  // label[v] = position of v in the canonical order
  CanonicalForm form;
};

WeightedGraph support_graph(const SepPoint& x);

/// Throws NoOneEdges if x has no 1-edge and OneEdgeCycle when the 1-edges
/// close up into a cycle (x is a tour).
std::vector<OnePath> one_paths(const SepPoint& x);

CanonicalLabeling canonical_labeling(const WeightedGraph& g);
CanonicalForm canonical_form(const WeightedGraph& g);
inline CanonicalForm canonical_form(const SepPoint& x) { return canonical_form(support_graph(x)); }

/// Applies node relabeling perm (new id of v is perm[v]).
WeightedGraph relabel(const WeightedGraph& g, const std::vector<Node>& perm);
SepPoint relabel(const SepPoint& x, const std::vector<Node>& perm);

}  // namespace gapbound
