#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "gapbound/error.hpp"
#include "gapbound/fixtures.hpp"
#include "gapbound/polytope.hpp"
#include "gapbound/walks.hpp"

using namespace gapbound;

namespace {

// Plain 3^|E| scan with an independent validity test (union-find).
std::vector<std::vector<int>> brute_force_walks(const WeightedGraph& g) {
  const std::size_t m = g.edge_count();
  std::vector<std::vector<int>> out;
  std::vector<int> w(m, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < m; ++i) {
      w[i] = static_cast<int>(c % 3);
      c /= 3;
    }
    std::vector<int> deg(g.n, 0);
    std::vector<int> root(g.n);
    for (int v = 0; v < g.n; ++v) root[v] = v;
    std::function<int(int)> find = [&](int v) { return root[v] == v ? v : root[v] = find(root[v]); };
    for (std::size_t i = 0; i < m; ++i) {
      if (!w[i]) continue;
      const Edge& e = g.edges[i].first;
      deg[e.u] += w[i];
      deg[e.v] += w[i];
      root[find(e.u)] = find(e.v);
    }
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v) ok = deg[v] >= 2 && deg[v] % 2 == 0 && find(v) == find(0);
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<int> as_vector(const WeightedGraph& g, const Walk& w) {
  std::vector<int> v;
  for (const auto& [e, c] : g.edges) v.push_back(w.at(e));
  return v;
}

WeightedGraph triangle() {
  return WeightedGraph(3, {{Edge(0, 1), 1}, {Edge(1, 2), 1}, {Edge(0, 2), 1}});
}

}  // namespace

TEST(Validity, Examples) {
  WeightedGraph cycle(6, {});
  std::map<Edge, int> m;
  for (int i = 0; i < 6; ++i) {
    cycle.edges.emplace_back(Edge(i, (i + 1) % 6), 1);
    m[Edge(i, (i + 1) % 6)] = 1;
  }
  cycle = WeightedGraph(6, cycle.edges);
  EXPECT_TRUE(is_valid_walk(cycle, Walk(m)).valid);

  const auto g = support_graph(prism());
  EXPECT_TRUE(is_valid_walk(g, doubled_tree_walk(g)).valid);

  // misses node 5
  std::map<Edge, int> partial{{Edge(0, 1), 2}, {Edge(1, 4), 2}, {Edge(3, 4), 2}, {Edge(0, 2), 2}};
  const auto r = is_valid_walk(g, Walk(partial));
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.defect, WalkDefect::Uncovered);
  EXPECT_EQ(r.witness, (std::vector<Node>{5}));

  std::map<Edge, int> odd{{Edge(0, 1), 1}};
  EXPECT_EQ(is_valid_walk(g, Walk(odd)).defect, WalkDefect::OddDegree);
  std::map<Edge, int> off{{Edge(0, 5), 2}};
  EXPECT_EQ(is_valid_walk(g, Walk(off)).defect, WalkDefect::OffGraph);
}

TEST(Enumerate, Triangle) {
  const auto g = triangle();
  std::set<std::vector<int>> got;
  for (const auto& w : enumerate_walks(g)) got.insert(as_vector(g, w));
  // edge order (0,1), (0,2), (1,2)
  const std::set<std::vector<int>> expected{{1, 1, 1}, {2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {2, 2, 2}};
  EXPECT_EQ(got, expected);
}

TEST(Enumerate, SingleEdge) {
  WeightedGraph g(2, {{Edge(0, 1), 1}});
  const auto ws = enumerate_walks(g);
  ASSERT_EQ(ws.size(), 1u);
  EXPECT_EQ(ws[0].at(Edge(0, 1)), 2);
}

TEST(Enumerate, PrismCountFrozen) {
  const auto g = support_graph(prism());
  const auto brute = brute_force_walks(g);
  const auto ws = enumerate_walks(g);
  EXPECT_EQ(ws.size(), brute.size());
  EXPECT_EQ(ws.size(), 461u);
}

TEST(Enumerate, MatchesBruteForceOnFixtures) {
  for (const auto& f : all_fixtures()) {
    const auto g = support_graph(f.point);
    if (g.edge_count() > 11) continue;
    std::set<std::vector<int>> a;
    for (const auto& w : enumerate_walks(g)) a.insert(as_vector(g, w));
    const auto b = brute_force_walks(g);
    EXPECT_EQ(a, std::set<std::vector<int>>(b.begin(), b.end())) << f.name;
  }
}

TEST(Enumerate, TooManyEdges) {
  std::vector<std::pair<Edge, Rational>> e;
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) e.emplace_back(Edge(u, v), 1);
  EXPECT_THROW(enumerate_walks(WeightedGraph(7, e)), Error);
}

TEST(MinCost, Examples) {
  auto g = support_graph(prism());
  for (auto& [e, c] : g.edges) c = 1;
  EXPECT_EQ(min_cost_walk(g).cost, 6);
  WeightedGraph path(3, {{Edge(0, 1), 1}, {Edge(1, 2), 1}});
  const auto pw = min_cost_walk(path);
  EXPECT_EQ(pw.cost, 4);
  EXPECT_EQ(pw.walk.at(Edge(0, 1)), 2);
  EXPECT_EQ(pw.walk.at(Edge(1, 2)), 2);
}

TEST(MinCost, MatchesEnumerationOnRandomCosts) {
  std::mt19937 rng(17);
  for (const auto& f : all_fixtures()) {
    auto g = support_graph(f.point);
    if (g.edge_count() > 12) continue;
    const auto ws = enumerate_walks(g);
    for (int t = 0; t < 100; ++t) {
      for (auto& [e, c] : g.edges) c = make_rational(static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 6));
      const auto best = min_cost_walk(g);
      ASSERT_TRUE(is_valid_walk(g, best.walk).valid);
      Rational brute = -1;
      for (const auto& w : ws) {
        const Rational c = w.cost(g);
        if (brute < 0 || c < brute) brute = c;
      }
      EXPECT_EQ(best.cost, brute) << f.name;
      EXPECT_EQ(best.cost, best.walk.cost(g));
    }
  }
}

TEST(MinCost, ToursAreWalks) {
  const auto g = support_graph(prism());
  int tours = 0;
  for (const auto& w : enumerate_walks(g)) {
    bool simple = true;
    for (const auto& [e, c] : w.multiplicities()) simple = simple && c == 1;
    if (simple) ++tours;
  }
  EXPECT_GT(tours, 0);
}

TEST(Extend, ClassOne) {
  const auto x = prism();
  const auto g = support_graph(x);
  const Edge e(0, 3);
  for (const auto& w : enumerate_walks(g)) {
    if (w.at(e) != 1) continue;
    const Walk y = extend_walk(w, 6, e, 2, 1);
    EXPECT_EQ(y.at(Edge(0, 6)), 1);
    EXPECT_EQ(y.at(Edge(6, 7)), 1);
    EXPECT_EQ(y.at(Edge(7, 3)), 1);
    EXPECT_EQ(y.at(e), 0);
    EXPECT_TRUE(is_valid_walk(expand_one_edge(x, e, 2), y).valid);
    break;
  }
}

TEST(Extend, ClassZeroGap) {
  const auto x = prism();
  const Edge e(0, 3);
  const auto big = expand_one_edge(x, e, 2);
  for (const auto& w : enumerate_walks(support_graph(x))) {
    if (w.at(e) != 0) continue;
    const Walk y = extend_walk(w, 6, e, 2, 0, 1);
    EXPECT_EQ(y.at(Edge(0, 6)), 2);
    EXPECT_EQ(y.at(Edge(6, 7)), 0);
    EXPECT_EQ(y.at(Edge(7, 3)), 2);
    EXPECT_TRUE(is_valid_walk(big, y).valid);
  }
}

TEST(Extend, AllOutputsValid) {
  for (const auto& f : all_fixtures()) {
    const auto g = support_graph(f.point);
    if (g.edge_count() > 12) continue;
    const auto ws = enumerate_walks(g);
    for (const Edge& e : f.point.one_edges()) {
      for (int d = 0; d <= 3; ++d) {
        const auto big = expand_one_edge(f.point, e, d);
        const auto path = expanded_path(f.point, e, d);
        for (const auto& w : ws) {
          const int m = w.at(e);
          for (int k = 0; k <= (m == 0 ? d : 0); ++k) {
            const Walk y = extend_walk(w, f.point.n(), e, d, m, k);
            ASSERT_TRUE(is_valid_walk(big, y).valid) << f.name;
            if (m == 0) {
              int gaps = 0;
              for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                const int c = y.at(Edge(path[i], path[i + 1]));
                EXPECT_TRUE(c == 0 || c == 2);
                if (c == 0) ++gaps;
              }
              EXPECT_EQ(gaps, 1);
            }
          }
        }
      }
    }
  }
}

TEST(Extend, IdentityAndMismatch) {
  const auto g = support_graph(prism());
  const auto ws = enumerate_walks(g);
  for (const auto& w : ws) {
    if (w.at(Edge(0, 3)) == 2) {
      EXPECT_EQ(extend_walk(w, 6, Edge(0, 3), 0, 2), w);
      try {
        extend_walk(w, 6, Edge(0, 3), 1, 1);
        FAIL();
      } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::ClassMismatch);
      }
      break;
    }
  }
}
