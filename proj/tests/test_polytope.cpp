#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gapbound/error.hpp"
#include "gapbound/fixtures.hpp"
#include "gapbound/polytope.hpp"

using namespace gapbound;

namespace {

// Exhaustive subtour check, independent of the min-cut routine.
bool brute_force_feasible(const SepPoint& x) {
  const int n = x.n();
  std::vector<Rational> deg(n, 0);
  for (const auto& [e, w] : x.weights()) {
    deg[e.u] += w;
    deg[e.v] += w;
  }
  for (const auto& d : deg)
    if (d != 2) return false;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<Node> s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    if (cut_value(x, s) < 2) return false;
  }
  return true;
}

SepPoint midpoint(const SepPoint& a, const SepPoint& b) {
  std::map<Edge, Rational> w;
  for (const auto& [e, v] : a.weights()) w[e] += v / 2;
  for (const auto& [e, v] : b.weights()) w[e] += v / 2;
  return SepPoint(a.n(), {w.begin(), w.end()});
}

}  // namespace

TEST(Feasibility, TourAndPrism) {
  EXPECT_TRUE(check_sep_feasible(tour_point({0, 2, 4, 1, 3, 5})).feasible);
  EXPECT_TRUE(check_sep_feasible(prism()).feasible);
}

TEST(Feasibility, TwoTrianglesWitness) {
  SepPoint x(6, {{Edge(0, 1), 1}, {Edge(1, 2), 1}, {Edge(0, 2), 1},
                 {Edge(3, 4), 1}, {Edge(4, 5), 1}, {Edge(3, 5), 1}});
  const auto r = check_sep_feasible(x);
  ASSERT_FALSE(r.feasible);
  ASSERT_TRUE(r.violation.has_value());
  EXPECT_EQ(r.violation->kind, ConstraintKind::SubtourElimination);
  EXPECT_EQ(r.violation->value, 0);
  EXPECT_EQ(r.violation->witness, (std::vector<Node>{0, 1, 2}));
}

TEST(Feasibility, DegreeViolation) {
  SepPoint x(3, {{Edge(0, 1), 1}, {Edge(1, 2), 1}});
  const auto r = check_sep_feasible(x);
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.violation->kind, ConstraintKind::NodeDegree);
}

TEST(MinCut, AgreesWithBruteForce) {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<std::pair<Edge, Rational>> edges;
    for (Node u = 0; u < n; ++u)
      for (Node v = u + 1; v < n; ++v)
        if (rng() % 3) edges.emplace_back(Edge(u, v), make_rational(static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 4)));
    WeightedGraph g(n, edges);
    Rational best = -1;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      Rational c = 0;
      for (const auto& [e, w] : g.edges)
        if (bool(mask & (1u << e.u)) != bool(mask & (1u << e.v))) c += w;
      if (best < 0 || c < best) best = c;
    }
    const MinCut cut = global_min_cut(g);
    EXPECT_EQ(cut.value, best);
    Rational side = 0;
    std::vector<char> in(n, 0);
    for (Node v : cut.side) in[v] = 1;
    for (const auto& [e, w] : g.edges)
      if (in[e.u] != in[e.v]) side += w;
    EXPECT_EQ(side, best);
  }
}

TEST(Vertex, TourIsVertex) {
  const auto r = is_vertex(tour_point({0, 1, 2, 3, 4, 5}));
  EXPECT_TRUE(r.is_vertex);
  EXPECT_EQ(r.dimension, 15u);
}

TEST(Vertex, MidpointOfToursIsNot) {
  const auto r = is_vertex(midpoint(tour_point({0, 1, 2, 3, 4, 5}), tour_point({0, 2, 1, 3, 5, 4})));
  EXPECT_TRUE(r.feasible);
  EXPECT_FALSE(r.is_vertex);
}

TEST(Vertex, Fixtures) {
  for (const auto& f : all_fixtures()) {
    const auto r = is_vertex(f.point);
    EXPECT_TRUE(r.is_vertex) << f.name << " rank " << r.tight_rank << "/" << r.dimension;
  }
}

TEST(Vertex, TooLarge) {
  std::vector<Node> order(13);
  std::iota(order.begin(), order.end(), 0);
  try {
    is_vertex(tour_point(order));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionTooLarge);
  }
}

TEST(BbMove, PrismExample) {
  const SepPoint y = bb_move(prism(), Edge(0, 3));
  EXPECT_EQ(y.n(), 7);
  EXPECT_EQ(y.edge_count(), 10u);
  EXPECT_EQ(y.weight(Edge(0, 6)), 1);
  EXPECT_EQ(y.weight(Edge(6, 3)), 1);
  EXPECT_EQ(y.weight(Edge(0, 3)), 0);
  EXPECT_THROW(bb_move(prism(), Edge(0, 1)), Error);
  const SepPoint z = bb_move(y, Edge(6, 3));
  EXPECT_EQ(static_cast<int>(z.edge_count()) - z.n(), 3);
}

TEST(BbMove, PreservesVertexhood) {
  for (const auto& f : all_fixtures()) {
    for (const Edge& e : f.point.one_edges()) {
      if (f.point.n() + 1 > kMaxDirectVertexCheck) continue;
      EXPECT_TRUE(is_vertex(bb_move(f.point, e)).is_vertex) << f.name;
    }
  }
}

TEST(Ancestor, PrismIsAncestor) {
  const auto dec = contract_to_ancestor(prism());
  EXPECT_EQ(dec.ancestor, prism());
  for (const auto& [e, d] : dec.expansions) EXPECT_EQ(d, 0);
}

TEST(Ancestor, InvertsSingleMove) {
  const auto dec = contract_to_ancestor(bb_move(prism(), Edge(0, 3)));
  EXPECT_TRUE(canonical_form(dec.ancestor) == canonical_form(prism()));
  std::vector<int> ds;
  for (const auto& [e, d] : dec.expansions) ds.push_back(d);
  EXPECT_EQ(ds, (std::vector<int>{1, 0, 0}));
}

TEST(Ancestor, CountsPerPath) {
  SepPoint x = expand_one_edge(prism(), Edge(0, 3), 2);
  x = expand_one_edge(x, Edge(2, 5), 1);
  const auto dec = contract_to_ancestor(x);
  std::vector<int> ds;
  for (const auto& [e, d] : dec.expansions) ds.push_back(d);
  EXPECT_EQ(ds, (std::vector<int>{2, 0, 1}));
  EXPECT_TRUE(expand(dec.ancestor, dec.expansions) == x);
}

TEST(Ancestor, RandomRoundTrips) {
  std::mt19937 rng(11);
  const auto fx = all_fixtures();
  for (int t = 0; t < 50; ++t) {
    const SepPoint& base = fx[rng() % fx.size()].point;
    SepPoint x = base;
    const int moves = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < moves; ++i) {
      const auto ones = x.one_edges();
      x = bb_move(x, ones[rng() % ones.size()]);
    }
    std::vector<Node> perm(x.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    x = relabel(x, perm);
    const auto dec = contract_to_ancestor(x);
    EXPECT_TRUE(canonical_form(dec.ancestor) == canonical_form(base));
    EXPECT_TRUE(canonical_form(expand(dec.ancestor, dec.expansions)) == canonical_form(x));
  }
}

TEST(Metric, Examples) {
  WeightedGraph path(3, {{Edge(0, 1), 1}, {Edge(1, 2), 2}});
  const auto c = metric_completion(path);
  EXPECT_EQ(c.edges[*c.index_of(Edge(0, 2))].second, 3);
  WeightedGraph k4(4, {{Edge(0, 1), 1}, {Edge(0, 2), 1}, {Edge(0, 3), 1},
                       {Edge(1, 2), 1}, {Edge(1, 3), 2}, {Edge(2, 3), 2}});
  const auto same = metric_completion(k4);
  EXPECT_EQ(same.edges, k4.edges);
  EXPECT_THROW(metric_completion(WeightedGraph(3, {{Edge(0, 1), 1}})), Error);
}

TEST(Metric, PrismUnitCosts) {
  auto g = support_graph(prism());
  for (auto& [e, w] : g.edges) w = 1;
  const auto c = metric_completion(g);
  for (const auto& [e, w] : c.edges) {
    EXPECT_EQ(w, g.index_of(e) ? 1 : 2);
  }
}

TEST(Metric, TriangleInequalityRandom) {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    std::vector<std::pair<Edge, Rational>> edges;
    for (Node v = 1; v < n; ++v) edges.emplace_back(Edge(static_cast<Node>(rng() % v), v), make_rational(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 3)));
    const auto c = metric_completion(WeightedGraph(n, edges));
    auto cost = [&](Node i, Node j) { return c.edges[*c.index_of(Edge(i, j))].second; };
    for (Node i = 0; i < n; ++i)
      for (Node j = 0; j < n; ++j)
        for (Node k = 0; k < n; ++k)
          if (i != j && j != k && i != k) EXPECT_LE(cost(i, j), cost(i, k) + cost(k, j));
  }
}

TEST(Enumerate, SmallN) {
  const auto v3 = enumerate_sep_vertices(3);
  ASSERT_EQ(v3.size(), 1u);
  EXPECT_TRUE(v3[0].is_integral());
  for (int n : {4, 5}) {
    for (const auto& x : enumerate_sep_vertices(n)) EXPECT_TRUE(x.is_integral()) << n;
  }
  EXPECT_THROW(enumerate_sep_vertices(7), Error);
}

TEST(Enumerate, SixNodes) {
  const auto v6 = enumerate_sep_vertices(6);
  bool has_prism = false;
  for (const auto& x : v6) {
    EXPECT_TRUE(is_vertex(x).is_vertex);
    EXPECT_TRUE(brute_force_feasible(x));
    if (!x.is_integral()) {
      const int e = static_cast<int>(x.edge_count());
      EXPECT_GE(e, x.n() + 3);
      EXPECT_LE(e, 2 * x.n() - 3);
    }
    if (canonical_form(x) == canonical_form(prism())) has_prism = true;
  }
  EXPECT_TRUE(has_prism);
}
