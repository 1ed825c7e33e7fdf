#include "gapbound/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "gapbound/error.hpp"
#include "linalg.hpp"

namespace gapbound {

namespace {

std::string set_text(const std::vector<Node>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::vector<Edge> all_edges(int n) {
  std::vector<Edge> out;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

std::vector<Node> component_of_zero(const WeightedGraph& g) {
  const auto adj = g.adjacency();
  std::vector<char> seen(g.n, 0);
  std::vector<Node> stack{0};
  seen[0] = 1;
  std::vector<Node> comp;
  while (!stack.empty()) {
    const Node v = stack.back();
    stack.pop_back();
    comp.push_back(v);
    for (const auto& [w, idx] : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

}  // namespace

MinCut global_min_cut(const WeightedGraph& g) {
  MinCut best;
  if (g.n < 2) return best;
  for (const auto& [e, w] : g.edges) {
    if (w < 0) throw Error(ErrorCode::InvalidArgument, "negative weight in min cut");
  }
  if (!g.is_connected()) {
    best.value = 0;
    best.side = component_of_zero(g);
    return best;
  }
  const int n = g.n;
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, 0));
  for (const auto& [e, x] : g.edges) {
    w[e.u][e.v] += x;
    w[e.v][e.u] += x;
  }
  // members[v] = original nodes merged into v
  std::vector<std::vector<Node>> members(n);
  for (Node v = 0; v < n; ++v) members[v] = {v};
  std::vector<Node> alive(n);
  std::iota(alive.begin(), alive.end(), 0);
  bool have = false;

  while (alive.size() > 1) {
    std::vector<Rational> conn(n, 0);
    std::vector<char> added(n, 0);
    Node prev = -1;
    Node last = -1;
    for (std::size_t step = 0; step < alive.size(); ++step) {
      Node pick = -1;
      for (Node v : alive) {
        if (added[v]) continue;
        if (pick < 0 || conn[v] > conn[pick]) pick = v;
      }
      if (pick < 0) break;
      added[pick] = 1;
      prev = last;
      last = pick;
      for (Node v : alive) {
        if (!added[v]) conn[v] += w[pick][v];
      }
    }
    if (!have || conn[last] < best.value) {
      best.value = conn[last];
      best.side = members[last];
      have = true;
    }
    // merge last into prev
    for (Node v : alive) {
      if (v == prev || v == last) continue;
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  std::sort(best.side.begin(), best.side.end());
  return best;
}

Rational cut_value(const SepPoint& x, const std::vector<Node>& set) {
  std::vector<char> in(x.n(), 0);
  for (Node v : set) in.at(v) = 1;
  Rational total = 0;
  for (const auto& [e, w] : x.weights()) {
    if (in[e.u] != in[e.v]) total += w;
  }
  return total;
}

std::vector<std::vector<Node>> subtour_sets(int n) {
  std::vector<std::vector<Node>> out;
  if (n < 6) return out;
  // subsets containing node 0 stand for the pair {S, V \ S}
  const std::uint32_t full = 1u << (n - 1);
  for (std::uint32_t rest = 0; rest < full; ++rest) {
    const int size = 1 + __builtin_popcount(rest);
    if (size < 3 || size > n - 3) continue;
    std::vector<Node> s{0};
    for (int b = 0; b < n - 1; ++b) {
      if (rest & (1u << b)) s.push_back(b + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

VertexCheckReport check_sep_feasible(const SepPoint& x) {
  VertexCheckReport report;
  const int n = x.n();
  report.dimension = static_cast<std::size_t>(n) * (n - 1) / 2;

  for (const auto& [e, w] : x.weights()) {
    if (w <= 0 || w > 1) {
      report.violation = Violation{ConstraintKind::EdgeBound, {e.u, e.v}, w,
                                   "edge weight " + to_string(w) + " outside (0, 1]"};
      return report;
    }
  }
  std::vector<Rational> deg(n, 0);
  for (const auto& [e, w] : x.weights()) {
    deg[e.u] += w;
    deg[e.v] += w;
  }
  for (Node v = 0; v < n; ++v) {
    if (deg[v] != 2) {
      report.violation = Violation{ConstraintKind::NodeDegree, {v}, deg[v],
                                   "degree of node " + std::to_string(v) + " is " + to_string(deg[v])};
      return report;
    }
  }
  const MinCut cut = global_min_cut(support_graph(x));
  if (n >= 2 && cut.value < 2) {
    report.violation = Violation{ConstraintKind::SubtourElimination, cut.side, cut.value,
                                 "cut " + set_text(cut.side) + " has value " + to_string(cut.value)};
    return report;
  }
  report.feasible = true;
  return report;
}

VertexCheckReport is_vertex(const SepPoint& x) {
  const int n = x.n();
  if (n > kMaxDirectVertexCheck) {
    throw Error(ErrorCode::DimensionTooLarge,
                "dimension too large for direct check (n = " + std::to_string(n) + ")");
  }
  VertexCheckReport report = check_sep_feasible(x);
  if (!report.feasible) return report;

  // Zero-bound rows are unit rows on the non-support columns. They are all
  // tight and independent, so the remaining rows only matter on the support.
  const std::size_t zeros = report.dimension - x.edge_count();
  std::vector<Edge> support;
  std::vector<Rational> weights;
  for (const auto& [e, w] : x.weights()) {
    support.push_back(e);
    weights.push_back(w);
  }
  const std::size_t m = support.size();
  detail::RankAccumulator acc(m);
  std::size_t tight = zeros;

  for (Node v = 0; v < n; ++v) {
    std::vector<Integer> row(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      if (support[j].has(v)) row[j] = 1;
    }
    ++tight;
    acc.add(std::move(row));
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (weights[j] != 1) continue;
    std::vector<Integer> row(m, 0);
    row[j] = 1;
    ++tight;
    acc.add(std::move(row));
  }
  // Scaled integer weights keep the cut scan cheap.
  const Integer den = common_denominator(weights);
  std::vector<Integer> scaled(m);
  for (std::size_t j = 0; j < m; ++j) scaled[j] = weights[j].get_num() * (den / weights[j].get_den());
  const Integer target = 2 * den;
  for (const auto& s : subtour_sets(n)) {
    std::uint32_t mask = 0;
    for (Node v : s) mask |= 1u << v;
    Integer value = 0;
    std::vector<Integer> row(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      const bool a = mask & (1u << support[j].u);
      const bool b = mask & (1u << support[j].v);
      if (a != b) {
        value += scaled[j];
        row[j] = 1;
      }
    }
    if (value != target) continue;
    ++tight;
    if (acc.rank() < m) acc.add(std::move(row));
  }
  report.tight_count = tight;
  report.tight_rank = zeros + acc.rank();
  report.is_vertex = report.tight_rank == report.dimension;
  return report;
}

SepPoint bb_move(const SepPoint& x, const Edge& e) {
  if (x.weight(e) != 1) {
    throw Error(ErrorCode::NotOneEdge, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                           ") is not a 1-edge");
  }
  const Node w = x.n();
  std::vector<std::pair<Edge, Rational>> edges;
  edges.reserve(x.edge_count() + 1);
  for (const auto& [f, val] : x.weights()) {
    if (f != e) edges.emplace_back(f, val);
  }
  edges.emplace_back(Edge(e.u, w), Rational(1));
  edges.emplace_back(Edge(w, e.v), Rational(1));
  return SepPoint(x.n() + 1, edges);
}

std::vector<Node> expanded_path(const SepPoint& x, const Edge& e, int d) {
  std::vector<Node> path{e.u};
  for (int i = 0; i < d; ++i) path.push_back(x.n() + i);
  path.push_back(e.v);
  return path;
}

SepPoint expand_one_edge(const SepPoint& x, const Edge& e, int d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative expansion count");
  if (x.weight(e) != 1) {
    throw Error(ErrorCode::NotOneEdge, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                           ") is not a 1-edge");
  }
  SepPoint cur = x;
  Node tail = e.u;
  for (int i = 0; i < d; ++i) {
    const Node fresh = cur.n();
    cur = bb_move(cur, Edge(tail, e.v));
    tail = fresh;
  }
  return cur;
}

AncestorDecomposition contract_to_ancestor(const SepPoint& x) {
  const auto paths = one_paths(x);
  std::vector<char> removed(x.n(), 0);
  for (const auto& p : paths) {
    for (Node v : p.internal_nodes()) removed[v] = 1;
  }
  std::vector<Node> label(x.n(), -1);
  int next = 0;
  for (Node v = 0; v < x.n(); ++v) {
    if (!removed[v]) label[v] = next++;
  }
  std::vector<std::pair<Edge, Rational>> edges;
  for (const auto& [e, w] : x.weights()) {
    if (removed[e.u] || removed[e.v]) continue;
    if (w == 1 && !(std::any_of(paths.begin(), paths.end(), [&](const OnePath& p) {
          return p.edge_count() == 1 && Edge(p.front(), p.back()) == e;
        }))) {
      continue;  // part of a longer 1-path, replaced below
    }
    edges.emplace_back(Edge(label[e.u], label[e.v]), w);
  }
  AncestorDecomposition out;
  for (const auto& p : paths) {
    const Edge contracted(label[p.front()], label[p.back()]);
    const int d = static_cast<int>(p.internal_nodes().size());
    if (d > 0) {
      for (const auto& [f, w] : edges) {
        if (f == contracted) {
          throw Error(ErrorCode::InvalidArgument,
                      "1-path ends " + std::to_string(p.front()) + " and " + std::to_string(p.back()) +
                          " are already adjacent");
        }
      }
      edges.emplace_back(contracted, Rational(1));
    }
    out.expansions.emplace_back(contracted, d);
  }
  out.ancestor = SepPoint(next, edges);
  return out;
}

SepPoint expand(const SepPoint& ancestor, const std::vector<std::pair<Edge, int>>& expansions) {
  SepPoint cur = ancestor;
  for (const auto& [e, d] : expansions) cur = expand_one_edge(cur, e, d);
  return cur;
}

WeightedGraph metric_completion(const WeightedGraph& g) {
  const int n = g.n;
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, 0));
  std::vector<std::vector<char>> known(n, std::vector<char>(n, 0));
  for (Node v = 0; v < n; ++v) known[v][v] = 1;
  for (const auto& [e, c] : g.edges) {
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "negative edge cost");
    dist[e.u][e.v] = dist[e.v][e.u] = c;
    known[e.u][e.v] = known[e.v][e.u] = 1;
  }
  for (Node k = 0; k < n; ++k) {
    for (Node i = 0; i < n; ++i) {
      if (!known[i][k]) continue;
      for (Node j = 0; j < n; ++j) {
        if (!known[k][j]) continue;
        Rational via = dist[i][k] + dist[k][j];
        if (!known[i][j] || via < dist[i][j]) {
          dist[i][j] = std::move(via);
          known[i][j] = 1;
        }
      }
    }
  }
  for (const auto& [e, c] : g.edges) {
    if (dist[e.u][e.v] != c) {
      throw Error(ErrorCode::NotMetric, "cost of edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                            ") exceeds its shortest path");
    }
  }
  std::vector<std::pair<Edge, Rational>> out;
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) {
      if (!known[i][j]) {
        throw Error(ErrorCode::Disconnected,
                    "disconnected graph: no path between " + std::to_string(i) + " and " + std::to_string(j));
      }
      out.emplace_back(Edge(i, j), dist[i][j]);
    }
  }
  return WeightedGraph(n, std::move(out));
}

namespace {

using IntVec = std::vector<Integer>;

void make_primitive(IntVec& v) {
  Integer g = 0;
  for (const auto& a : v) {
    if (a != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  if (g > 1) {
    for (auto& a : v) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  }
}

IntVec to_integer_row(const std::vector<Rational>& r) {
  const Integer den = common_denominator(r);
  IntVec out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i].get_num() * (den / r[i].get_den());
  make_primitive(out);
  return out;
}

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

struct Ray {
  IntVec y;
  std::uint64_t zero = 0;  // processed rows with h.y = 0
};

// Extreme rays of the pointed cone {y : H y >= 0} by incremental double
// description with the combinatorial adjacency test.
std::vector<IntVec> cone_rays(const std::vector<IntVec>& h) {
  const std::size_t dim = h.front().size();
  if (h.size() > 64) throw Error(ErrorCode::DimensionTooLarge, "too many rows for enumeration");

  detail::RankAccumulator acc(dim);
  std::vector<std::size_t> initial;
  std::vector<std::size_t> later;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (initial.size() < dim && acc.add(h[i])) {
      initial.push_back(i);
    } else {
      later.push_back(i);
    }
  }
  if (initial.size() < dim) throw Error(ErrorCode::InvalidArgument, "cone is not pointed");

  detail::RationalMatrix basis(dim);
  for (std::size_t r = 0; r < dim; ++r) basis[r].assign(h[initial[r]].begin(), h[initial[r]].end());
  std::vector<Ray> rays;
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<Rational> unit(dim, 0);
    unit[c] = 1;
    auto col = detail::solve_square(basis, unit);
    Ray ray;
    ray.y = to_integer_row(*col);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r != c) ray.zero |= std::uint64_t{1} << initial[r];
    }
    rays.push_back(std::move(ray));
  }

  for (std::size_t row : later) {
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(h[row], rays[i].y);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
    }
    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const std::uint64_t common = rays[p].zero & rays[q].zero;
        if (static_cast<std::size_t>(__builtin_popcountll(common)) + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o != p && o != q && (rays[o].zero & common) == common) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh;
        fresh.y.resize(dim);
        for (std::size_t k = 0; k < dim; ++k) fresh.y[k] = val[p] * rays[q].y[k] - val[q] * rays[p].y[k];
        make_primitive(fresh.y);
        fresh.zero = common | (std::uint64_t{1} << row);
        next.push_back(std::move(fresh));
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] == 0) rays[i].zero |= std::uint64_t{1} << row;
      if (val[i] >= 0) next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }
  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.y));
  return out;
}

}  // namespace

std::vector<SepPoint> enumerate_sep_vertices(int n) {
  if (n > kMaxEnumerationNodes) {
    throw Error(ErrorCode::DimensionTooLarge, "n too large for enumeration oracle");
  }
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "SEP needs at least 3 nodes");
  const auto edges = all_edges(n);
  const std::size_t m = edges.size();

  // x = x0 + N z on the affine hull of the degree equalities.
  detail::RationalMatrix degree(n, std::vector<Rational>(m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    degree[edges[j].u][j] = 1;
    degree[edges[j].v][j] = 1;
  }
  const auto null = detail::nullspace(degree, m);
  const std::size_t d = null.size();
  const Rational x0 = make_rational(2, n - 1);

  // Rows a.x >= b in homogeneous form (a N | a x0 - b) . (z, t) >= 0.
  std::vector<IntVec> rows;
  auto add_row = [&](const std::vector<Rational>& a, const Rational& b) {
    std::vector<Rational> r(d + 1, 0);
    Rational ax0 = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (a[j] == 0) continue;
      ax0 += a[j] * x0;
      for (std::size_t k = 0; k < d; ++k) r[k] += a[j] * null[k][j];
    }
    r[d] = ax0 - b;
    rows.push_back(to_integer_row(r));
  };
  {
    std::vector<Rational> t(d + 1, 0);
    t[d] = 1;
    rows.push_back(to_integer_row(t));
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Rational> a(m, 0);
    a[j] = 1;
    add_row(a, 0);
    a[j] = -1;
    add_row(a, -1);
  }
  for (const auto& s : subtour_sets(n)) {
    std::vector<char> in(n, 0);
    for (Node v : s) in[v] = 1;
    std::vector<Rational> a(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      if (in[edges[j].u] != in[edges[j].v]) a[j] = 1;
    }
    add_row(a, 2);
  }

  std::vector<std::pair<CanonicalForm, SepPoint>> found;
  for (const auto& y : cone_rays(rows)) {
    if (y[d] <= 0) continue;
    const Rational t(y[d]);
    std::vector<std::pair<Edge, Rational>> w;
    for (std::size_t j = 0; j < m; ++j) {
      Rational v = x0;
      for (std::size_t k = 0; k < d; ++k) {
        if (y[k] != 0) v += null[k][j] * y[k] / t;
      }
      w.emplace_back(edges[j], v);
    }
    SepPoint p(n, w);
    CanonicalLabeling lab = canonical_labeling(support_graph(p));
    found.emplace_back(std::move(lab.form), relabel(p, lab.label));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SepPoint> out;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (i > 0 && found[i].first == found[i - 1].first) continue;
    out.push_back(std::move(found[i].second));
  }
  return out;
}

}  // namespace gapbound
