#include "gapbound/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "gapbound/error.hpp"

namespace gapbound {

Edge::Edge(Node a, Node b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) throw Error(ErrorCode::InvalidArgument, "loop edge on node " + std::to_string(a));
  if (a < 0 || b < 0) throw Error(ErrorCode::InvalidArgument, "negative node index");
}

WeightedGraph::WeightedGraph(int node_count, std::vector<std::pair<Edge, Rational>> edge_list)
    : n(node_count), edges(std::move(edge_list)) {
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first.v >= n) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (i > 0 && edges[i].first == edges[i - 1].first) {
      throw Error(ErrorCode::InvalidArgument, "duplicate edge");
    }
  }
}

std::optional<std::size_t> WeightedGraph::index_of(const Edge& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e,
                             [](const auto& entry, const Edge& key) { return entry.first < key; });
  if (it == edges.end() || it->first != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges.begin());
}

std::vector<std::vector<std::pair<Node, std::size_t>>> WeightedGraph::adjacency() const {
  std::vector<std::vector<std::pair<Node, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i].first;
    adj[e.u].emplace_back(e.v, i);
    adj[e.v].emplace_back(e.u, i);
  }
  return adj;
}

bool WeightedGraph::is_connected() const {
  if (n <= 1) return true;
  const auto adj = adjacency();
  std::vector<char> seen(n, 0);
  std::vector<Node> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Node v = stack.back();
    stack.pop_back();
    for (const auto& [w, idx] : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

SepPoint::SepPoint(int n, const std::vector<std::pair<Edge, Rational>>& weights) : n_(n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative node count");
  for (const auto& [e, w] : weights) {
    if (e.v >= n) throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    if (w < 0 || w > 1) {
      throw Error(ErrorCode::InvalidArgument, "weight " + to_string(w) + " outside [0, 1]");
    }
    if (w == 0) continue;
    if (!weights_.emplace(e, w).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate edge");
    }
  }
}

Rational SepPoint::weight(const Edge& e) const {
  auto it = weights_.find(e);
  return it == weights_.end() ? Rational(0) : it->second;
}

bool SepPoint::is_integral() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const auto& entry) { return entry.second == 1; });
}

std::vector<Edge> SepPoint::one_edges() const {
  std::vector<Edge> out;
  for (const auto& [e, w] : weights_) {
    if (w == 1) out.push_back(e);
  }
  return out;
}

std::vector<int> SepPoint::support_degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& [e, w] : weights_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<Node> OnePath::internal_nodes() const {
  if (nodes.size() <= 2) return {};
  return {nodes.begin() + 1, nodes.end() - 1};
}

WeightedGraph support_graph(const SepPoint& x) {
  return WeightedGraph(x.n(), {x.weights().begin(), x.weights().end()});
}

std::vector<OnePath> one_paths(const SepPoint& x) {
  const auto ones = x.one_edges();
  if (ones.empty()) {
    throw Error(ErrorCode::NoOneEdges, "point has no 1-edges");
  }
  std::vector<std::vector<Node>> adj(x.n());
  for (const auto& e : ones) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> used(x.n(), 0);
  std::vector<OnePath> paths;
  for (Node start = 0; start < x.n(); ++start) {
    if (used[start] || adj[start].size() != 1) continue;
    OnePath path;
    Node prev = -1;
    Node cur = start;
    while (true) {
      path.nodes.push_back(cur);
      used[cur] = 1;
      Node next = -1;
      for (Node w : adj[cur]) {
        if (w != prev) next = w;
      }
      if (next < 0 || (adj[cur].size() == 1 && prev >= 0)) break;
      prev = cur;
      cur = next;
    }
    if (path.front() > path.back()) std::reverse(path.nodes.begin(), path.nodes.end());
    paths.push_back(std::move(path));
  }
  for (Node v = 0; v < x.n(); ++v) {
    if (!adj[v].empty() && !used[v]) {
      throw Error(ErrorCode::OneEdgeCycle, "1-edges form a closed cycle through node " + std::to_string(v));
    }
  }
  std::sort(paths.begin(), paths.end(),
            [](const OnePath& a, const OnePath& b) { return a.nodes < b.nodes; });
  return paths;
}

bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    const auto& x = a.edges[i];
    const auto& y = b.edges[i];
    if (x.u != y.u || x.v != y.v || x.weight != y.weight) return false;
  }
  return true;
}

bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.n != b.n) return a.n < b.n;
  const std::size_t m = std::min(a.edges.size(), b.edges.size());
  for (std::size_t i = 0; i < m; ++i) {
    const auto& x = a.edges[i];
    const auto& y = b.edges[i];
    if (x.u != y.u) return x.u < y.u;
    if (x.v != y.v) return x.v < y.v;
    if (x.weight != y.weight) return x.weight < y.weight;
  }
  return a.edges.size() < b.edges.size();
}

namespace {

// Colour refinement followed by individualisation. Weights are replaced by
// their rank among the distinct weights of the graph, which is an exact and
// order-preserving encoding.
class Canonizer {
 public:
  explicit Canonizer(const WeightedGraph& g) : n_(g.n), wrank_(g.n, std::vector<int>(g.n, 0)), nbrs_(g.n) {
    std::vector<Rational> distinct;
    for (const auto& [e, w] : g.edges) distinct.push_back(w);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& [e, w] : g.edges) {
      const int r = 1 + static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), w) -
                                         distinct.begin());
      wrank_[e.u][e.v] = wrank_[e.v][e.u] = r;
    }
    for (Node v = 0; v < n_; ++v) {
      for (Node u = 0; u < n_; ++u) {
        if (wrank_[v][u] != 0) nbrs_[v].push_back(u);
      }
    }
  }

  std::vector<Node> run() {
    std::vector<int> colors(n_, 0);
    search(colors);
    return best_label_;
  }

 private:
  using Key = std::vector<std::array<int, 3>>;

  void refine(std::vector<int>& colors) const {
    int classes = count_classes(colors);
    while (true) {
      std::vector<std::pair<std::vector<int>, Node>> sig(n_);
      for (Node v = 0; v < n_; ++v) {
        std::vector<std::pair<int, int>> nb;
        nb.reserve(nbrs_[v].size());
        for (Node u : nbrs_[v]) nb.emplace_back(wrank_[v][u], colors[u]);
        std::sort(nb.begin(), nb.end());
        std::vector<int> s{colors[v]};
        for (const auto& [a, b] : nb) {
          s.push_back(a);
          s.push_back(b);
        }
        sig[v] = {std::move(s), v};
      }
      std::vector<std::vector<int>> keys;
      keys.reserve(n_);
      for (const auto& s : sig) keys.push_back(s.first);
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (Node v = 0; v < n_; ++v) {
        colors[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) -
                                     keys.begin());
      }
      const int now = static_cast<int>(keys.size());
      if (now == classes) return;
      classes = now;
    }
  }

  static int count_classes(const std::vector<int>& colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  Key leaf_key(const std::vector<int>& colors) const {
    Key key;
    for (Node v = 0; v < n_; ++v) {
      for (Node u : nbrs_[v]) {
        if (u <= v) continue;
        const int a = colors[v];
        const int b = colors[u];
        key.push_back({std::min(a, b), std::max(a, b), wrank_[v][u]});
      }
    }
    std::sort(key.begin(), key.end());
    return key;
  }

  void search(std::vector<int> colors) {
    refine(colors);
    if (count_classes(colors) == n_) {
      Key key = leaf_key(colors);
      if (best_label_.empty() || key < best_key_) {
        best_key_ = std::move(key);
        best_label_ = colors;
      }
      return;
    }
    // first non-singleton cell in colour order
    std::vector<int> size(n_, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;
    for (Node v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(n_);
      for (Node u = 0; u < n_; ++u) next[u] = 2 * colors[u];
      next[v] = 2 * colors[v] - 1;
      search(std::move(next));
    }
  }

  int n_;
  std::vector<std::vector<int>> wrank_;
  std::vector<std::vector<Node>> nbrs_;
  Key best_key_;
  std::vector<Node> best_label_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const WeightedGraph& g) {
  CanonicalLabeling out;
  out.form.n = g.n;
  if (g.n == 0) return out;
  Canonizer canon(g);
  out.label = canon.run();
  for (const auto& [e, w] : g.edges) {
    const Node a = out.label[e.u];
    const Node b = out.label[e.v];
    out.form.edges.push_back({std::min(a, b), std::max(a, b), w});
  }
  std::sort(out.form.edges.begin(), out.form.edges.end(),
            [](const CanonicalEdge& x, const CanonicalEdge& y) {
              if (x.u != y.u) return x.u < y.u;
              return x.v < y.v;
            });
  return out;
}

CanonicalForm canonical_form(const WeightedGraph& g) { return canonical_labeling(g).form; }

WeightedGraph relabel(const WeightedGraph& g, const std::vector<Node>& perm) {
  std::vector<std::pair<Edge, Rational>> edges;
  edges.reserve(g.edges.size());
  for (const auto& [e, w] : g.edges) edges.emplace_back(Edge(perm[e.u], perm[e.v]), w);
  return WeightedGraph(g.n, std::move(edges));
}

SepPoint relabel(const SepPoint& x, const std::vector<Node>& perm) {
  std::vector<std::pair<Edge, Rational>> edges;
  for (const auto& [e, w] : x.weights()) edges.emplace_back(Edge(perm[e.u], perm[e.v]), w);
  return SepPoint(x.n(), edges);
}

}  // namespace gapbound
