#include "gapbound/walks.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

#include "gapbound/error.hpp"
#include "held_karp.hpp"

namespace gapbound {

Walk::Walk(const std::map<Edge, int>& multiplicities) {
  for (const auto& [e, m] : multiplicities) {
    if (m < 0 || m > 2) throw Error(ErrorCode::InvalidArgument, "walk multiplicity outside {0, 1, 2}");
    if (m > 0) mult_.emplace(e, m);
  }
}

int Walk::at(const Edge& e) const {
  auto it = mult_.find(e);
  return it == mult_.end() ? 0 : it->second;
}

Rational Walk::cost(const WeightedGraph& costs) const {
  Rational total = 0;
  for (const auto& [e, m] : mult_) {
    const auto idx = costs.index_of(e);
    if (!idx) throw Error(ErrorCode::InvalidArgument, "walk edge missing from cost graph");
    total += m * costs.edges[*idx].second;
  }
  return total;
}

namespace {

std::string edge_text(const Edge& e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

}  // namespace

WalkCheck is_valid_walk(const WeightedGraph& g, const Walk& w) {
  WalkCheck out;
  std::vector<int> deg(g.n, 0);
  for (const auto& [e, m] : w.multiplicities()) {
    if (e.v >= g.n || !g.index_of(e)) {
      out.defect = WalkDefect::OffGraph;
      out.witness = {e.u, e.v};
      out.message = "edge " + edge_text(e) + " is not in the graph";
      return out;
    }
    if (m < 0 || m > 2) {
      out.defect = WalkDefect::Multiplicity;
      out.witness = {e.u, e.v};
      out.message = "edge " + edge_text(e) + " has multiplicity " + std::to_string(m);
      return out;
    }
    deg[e.u] += m;
    deg[e.v] += m;
  }
  for (Node v = 0; v < g.n; ++v) {
    if (deg[v] % 2 != 0) {
      out.defect = WalkDefect::OddDegree;
      out.witness = {v};
      out.message = "node " + std::to_string(v) + " has odd degree " + std::to_string(deg[v]);
      return out;
    }
  }
  for (Node v = 0; v < g.n; ++v) {
    if (deg[v] == 0) {
      out.defect = WalkDefect::Uncovered;
      out.witness = {v};
      out.message = "node " + std::to_string(v) + " is not visited";
      return out;
    }
  }
  if (g.n > 0) {
    std::vector<std::vector<Node>> adj(g.n);
    for (const auto& [e, m] : w.multiplicities()) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(g.n, 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const Node v = stack.back();
      stack.pop_back();
      for (Node u : adj[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::vector<Node> away;
    for (Node v = 0; v < g.n; ++v) {
      if (!seen[v]) away.push_back(v);
    }
    if (!away.empty()) {
      out.defect = WalkDefect::Disconnected;
      out.witness = away;
      out.message = "node " + std::to_string(away.front()) + " is not reachable from node 0";
      return out;
    }
  }
  out.valid = true;
  return out;
}

WalkCheck is_valid_walk(const SepPoint& x, const Walk& w) { return is_valid_walk(support_graph(x), w); }

std::vector<Walk> enumerate_walks(const WeightedGraph& g) {
  const std::size_t m = g.edge_count();
  if (m > kMaxEnumerationEdges) {
    throw Error(ErrorCode::EdgeCountTooLarge,
                "edge count too large for enumeration (" + std::to_string(m) + " edges)");
  }
  // last[v] = index of the last edge touching v; once it is fixed the
  // degree of v is final and must be even and positive.
  std::vector<int> last(g.n, -1);
  for (std::size_t i = 0; i < m; ++i) {
    last[g.edges[i].first.u] = static_cast<int>(i);
    last[g.edges[i].first.v] = static_cast<int>(i);
  }
  for (Node v = 0; v < g.n; ++v) {
    if (last[v] < 0 && g.n > 1) return {};
  }
  std::vector<Walk> out;
  std::vector<int> mult(m, 0);
  std::vector<int> deg(g.n, 0);

  auto closes = [&](std::size_t i, Node v) {
    return last[v] == static_cast<int>(i) && (deg[v] == 0 || deg[v] % 2 != 0);
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      std::map<Edge, int> mm;
      for (std::size_t j = 0; j < m; ++j) {
        if (mult[j]) mm.emplace(g.edges[j].first, mult[j]);
      }
      Walk w(mm);
      if (is_valid_walk(g, w).valid) out.push_back(std::move(w));
      return;
    }
    const Edge& e = g.edges[i].first;
    for (int k = 0; k <= 2; ++k) {
      mult[i] = k;
      deg[e.u] += k;
      deg[e.v] += k;
      if (!closes(i, e.u) && !closes(i, e.v)) self(self, i + 1);
      deg[e.u] -= k;
      deg[e.v] -= k;
    }
    mult[i] = 0;
  };
  rec(rec, 0);
  return out;
}

namespace {

template <class T>
PricedWalk min_cost_walk_typed(const WeightedGraph& g, const std::vector<T>& cost) {
  const int n = g.n;
  std::vector<std::vector<std::optional<T>>> dist(n, std::vector<std::optional<T>>(n));
  std::vector<std::vector<Node>> next(n, std::vector<Node>(n, -1));
  for (Node v = 0; v < n; ++v) {
    dist[v][v] = T(0);
    next[v][v] = v;
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i].first;
    dist[e.u][e.v] = dist[e.v][e.u] = cost[i];
    next[e.u][e.v] = e.v;
    next[e.v][e.u] = e.u;
  }
  for (Node k = 0; k < n; ++k) {
    for (Node i = 0; i < n; ++i) {
      if (!dist[i][k]) continue;
      for (Node j = 0; j < n; ++j) {
        if (!dist[k][j]) continue;
        T via = *dist[i][k] + *dist[k][j];
        if (!dist[i][j] || via < *dist[i][j]) {
          dist[i][j] = std::move(via);
          next[i][j] = next[i][k];
        }
      }
    }
  }
  std::vector<std::vector<T>> closure(n, std::vector<T>(n));
  for (Node i = 0; i < n; ++i) {
    for (Node j = 0; j < n; ++j) {
      if (!dist[i][j]) throw Error(ErrorCode::Disconnected, "walk oracle needs a connected graph");
      closure[i][j] = *dist[i][j];
    }
  }
  const auto tour = detail::held_karp(closure);
  std::map<Edge, int> mult;
  auto walk_path = [&](Node a, Node b) {
    while (a != b) {
      const Node step = next[a][b];
      ++mult[Edge(a, step)];
      a = step;
    }
  };
  if (n == 2) {
    walk_path(0, 1);
    walk_path(1, 0);
  } else {
    for (std::size_t i = 0; i < tour.order.size(); ++i) {
      walk_path(tour.order[i], tour.order[(i + 1) % tour.order.size()]);
    }
  }
  for (auto& [e, m] : mult) {
    while (m > 2) m -= 2;
  }
  PricedWalk out{Walk(mult), 0};
  out.cost = out.walk.cost(g);
  return out;
}

}  // namespace

PricedWalk min_cost_walk(const WeightedGraph& g) {
  if (g.n <= 1) return {Walk(), 0};
  if (g.n > kMaxHeldKarpWalkNodes) {
    throw Error(ErrorCode::DimensionTooLarge, "walk oracle limited to " +
                                                  std::to_string(kMaxHeldKarpWalkNodes) + " nodes");
  }
  std::vector<Rational> costs;
  for (const auto& [e, c] : g.edges) {
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "negative cost in walk oracle");
    costs.push_back(c);
  }
  const Integer den = common_denominator(costs);
  std::vector<Integer> scaled(costs.size());
  Integer total = 0;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    scaled[i] = costs[i].get_num() * (den / costs[i].get_den());
    total += scaled[i];
  }
  // any path or tour costs at most 2 * n * total
  if (2 * total * (g.n + 1) < Integer(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::int64_t> small(scaled.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) small[i] = scaled[i].get_si();
    return min_cost_walk_typed(g, small);
  }
  return min_cost_walk_typed(g, scaled);
}

Walk doubled_tree_walk(const WeightedGraph& g) {
  // Kruskal
  std::vector<std::size_t> order(g.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.edges[a].second < g.edges[b].second; });
  std::vector<Node> root(g.n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](Node v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  std::map<Edge, int> mult;
  for (std::size_t i : order) {
    const Edge& e = g.edges[i].first;
    const Node a = find(e.u);
    const Node b = find(e.v);
    if (a == b) continue;
    root[a] = b;
    mult[e] = 2;
  }
  if (static_cast<int>(mult.size()) + 1 != g.n && g.n > 0) {
    throw Error(ErrorCode::Disconnected, "spanning tree needs a connected graph");
  }
  return Walk(mult);
}

Walk extend_walk(const Walk& w, int n, const Edge& e, int d, int m, int k) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative expansion count");
  if (m < 0 || m > 2) throw Error(ErrorCode::InvalidArgument, "walk class must be 0, 1 or 2");
  if (w.at(e) != m) {
    throw Error(ErrorCode::ClassMismatch, "class mismatch: walk uses " + edge_text(e) + " " +
                                              std::to_string(w.at(e)) + " times, class " + std::to_string(m));
  }
  if (m == 0 && (k < 0 || k > d)) throw Error(ErrorCode::InvalidArgument, "path index out of range");
  if (d == 0) return w;

  std::vector<Node> path{e.u};
  for (int i = 0; i < d; ++i) path.push_back(n + i);
  path.push_back(e.v);

  std::map<Edge, int> mult = w.multiplicities();
  mult.erase(e);
  for (int i = 0; i <= d; ++i) {
    const Edge f(path[i], path[i + 1]);
    int val = m;
    if (m == 0) val = i == k ? 0 : 2;
    if (val > 0) mult[f] += val;
  }
  for (auto& [f, c] : mult) {
    while (c > 2) c -= 2;
  }
  return Walk(mult);
}

}  // namespace gapbound
