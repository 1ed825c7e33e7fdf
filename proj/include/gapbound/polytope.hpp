#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gapbound/graph.hpp"

namespace gapbound {

/// Node set S with 3 <= |S| <= n-3 and the weight crossing it.
struct SubtourCut {
  std::vector<Node> set;
  Rational value;
};

enum class ConstraintKind { NodeDegree, SubtourElimination, EdgeBound };

struct Violation {
  ConstraintKind kind;
  std::vector<Node> witness;  // node, or node set for cuts
  Rational value;             // degree sum or cut value
  std::string message;
};

struct VertexCheckReport {
  bool feasible = false;
  std::optional<Violation> violation;
  std::size_t tight_count = 0;
  std::size_t tight_rank = 0;
  std::size_t dimension = 0;  // |E_n|
  bool is_vertex = false;
};

/// Degree equalities, 0 <= x <= 1 and a global minimum cut of at least 2.
VertexCheckReport check_sep_feasible(const SepPoint& x);

/// Largest n accepted by is_vertex.
inline constexpr int kMaxDirectVertexCheck = 12;

/// Feasibility plus the exact rank of all tight constraints.
/// Throws DimensionTooLarge for n > kMaxDirectVertexCheck.
VertexCheckReport is_vertex(const SepPoint& x);

/// Global minimum cut of a non-negatively weighted graph (Stoer-Wagner).
/// `side` is one shore of a minimum cut; for disconnected graphs it is a
/// connected component and the value is 0.
struct MinCut {
  Rational value;
  std::vector<Node> side;
};
MinCut global_min_cut(const WeightedGraph& g);

/// Splits 1-edge e = (a, b) with a fresh node n: a - n - b.
SepPoint bb_move(const SepPoint& x, const Edge& e);

/// d consecutive BB-moves on e = (a, b), a = e.u. The new nodes are
/// n, n+1, ..., n+d-1 and the resulting 1-path is a, n, ..., n+d-1, b.
SepPoint expand_one_edge(const SepPoint& x, const Edge& e, int d);
std::vector<Node> expanded_path(const SepPoint& x, const Edge& e, int d);

struct AncestorDecomposition {
  SepPoint ancestor;
  /// 1-edge of the ancestor and the number of internal nodes it carries in
  /// the decomposed point.
  std::vector<std::pair<Edge, int>> expansions;
};

AncestorDecomposition contract_to_ancestor(const SepPoint& x);

/// Applies the expansions of a decomposition in order.
SepPoint expand(const SepPoint& ancestor, const std::vector<std::pair<Edge, int>>& expansions);

/// Shortest-path completion to a cost on every edge of K_n.
WeightedGraph metric_completion(const WeightedGraph& g);

inline constexpr int kMaxEnumerationNodes = 6;

/// Every vertex of the SEP polytope on n nodes, one per isomorphism class,
/// sorted by canonical form. Double description over degree, bound and
/// subtour constraints.
std::vector<SepPoint> enumerate_sep_vertices(int n);

/// Node-sets of all subtour constraints of K_n, one per {S, V \ S} pair.
std::vector<std::vector<Node>> subtour_sets(int n);

Rational cut_value(const SepPoint& x, const std::vector<Node>& set);

}  // namespace gapbound
