#include <gtest/gtest.h>

#include <random>

#include "gapbound/certificate.hpp"
#include "gapbound/error.hpp"
#include "gapbound/fixtures.hpp"
#include "gapbound/gap_bounding.hpp"
#include "gapbound/polytope.hpp"

using namespace gapbound;

namespace {

const Rational kFourThirds = make_rational(4, 3);

// random expansions of the 1-edges with at most `budget` new nodes in total
std::vector<std::pair<Edge, int>> random_expansions(const SepPoint& x, int budget, std::mt19937& rng) {
  const auto ones = x.one_edges();
  std::vector<int> d(ones.size(), 0);
  std::uniform_int_distribution<int> total(1, budget);
  std::uniform_int_distribution<std::size_t> which(0, ones.size() - 1);
  for (int t = total(rng); t > 0; --t) ++d[which(rng)];
  std::vector<std::pair<Edge, int>> out;
  for (std::size_t i = 0; i < ones.size(); ++i) out.emplace_back(ones[i], d[i]);
  return out;
}

}  // namespace

TEST(ComputeC, HandAssignment) {
  const SepPoint x = prism();
  const Edge e(0, 3);
  const Walk twice({{Edge(0, 3), 2}, {Edge(0, 1), 2}, {Edge(0, 2), 2}, {Edge(3, 4), 2}, {Edge(3, 5), 2}});
  const Walk avoid({{Edge(0, 1), 1}, {Edge(0, 2), 1}, {Edge(1, 4), 1}, {Edge(2, 5), 1}, {Edge(3, 4), 1},
                    {Edge(3, 5), 1}});
  const Walk once({{Edge(0, 3), 1}, {Edge(3, 4), 1}, {Edge(4, 5), 1}, {Edge(2, 5), 1}, {Edge(1, 2), 1},
                   {Edge(0, 1), 1}});
  DualAssignment mu{{twice, make_rational(1, 2)}, {avoid, make_rational(1, 4)}};
  EXPECT_EQ(compute_C(x, mu, e), make_rational(3, 2));
  mu[once] = make_rational(1, 8);
  EXPECT_EQ(compute_C(x, mu, e), make_rational(13, 8));
  EXPECT_THROW(compute_C(x, mu, Edge(0, 1)), Error);
}

TEST(Gb, PrismBoundIsFourThirds) {
  const GbRun run = gb(prism());
  EXPECT_EQ(run.result.opt2_value, make_rational(9, 10));
  EXPECT_EQ(run.result.gap_plus, make_rational(10, 9));
  EXPECT_EQ(run.result.c_star, make_rational(6, 5));
  EXPECT_EQ(run.result.bound, kFourThirds);
  EXPECT_EQ(run.result.constants.size(), 3u);
}

TEST(Gb, FixtureBoundsFrozen) {
  const std::map<std::string, Rational> frozen = {
      {"a4-1", kFourThirds}, {"a4-2", kFourThirds}, {"a4-3", make_rational(11, 8)},
      {"a4-4", make_rational(13, 10)}, {"a4-5", kFourThirds}};
  for (const auto& f : family4_fixtures()) {
    const GbRun run = gb(f.point);
    EXPECT_EQ(run.result.bound, frozen.at(f.name)) << f.name;
    for (const auto& [e, c] : run.result.constants) EXPECT_GE(c, 1) << f.name;
  }
}

TEST(Gb, RejectsPointsWithoutOneEdges) {
  const Rational t = make_rational(2, 3);
  const SepPoint k4(4, {{Edge(0, 1), t}, {Edge(0, 2), t}, {Edge(0, 3), t},
                        {Edge(1, 2), t}, {Edge(1, 3), t}, {Edge(2, 3), t}});
  try {
    gb(k4);
    FAIL() << "expected NoOneEdges";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoOneEdges);
  }
}

TEST(Gbe, ZeroIterationsEqualsGb) {
  for (const auto& f : all_fixtures()) {
    const GbeResult r = gbe(f.point, Rational(1), 0);
    EXPECT_EQ(r.iterations, 0);
    EXPECT_EQ(r.bound, gb(f.point).result.bound) << f.name;
  }
}

TEST(Gbe, NeverWorseThanGb) {
  for (const auto& f : all_fixtures()) {
    const GbeResult r = gbe(f.point, Rational(1), 3);
    EXPECT_LE(r.bound, gb(f.point).result.bound) << f.name;
    EXPECT_EQ(r.steps.size(), static_cast<std::size_t>(r.iterations) + 1);
    EXPECT_EQ(r.steps[r.best].run.result.bound, r.bound);
  }
}

TEST(Gbe, FamilyFourReachesFourThirds) {
  for (const auto& f : family4_fixtures()) {
    const GbeResult r = gbe(f.point, kFourThirds, 2);
    EXPECT_LE(r.bound, kFourThirds) << f.name;
    EXPECT_LE(r.iterations, 2) << f.name;
  }
  const auto a43 = family4_fixtures()[2];
  ASSERT_EQ(a43.name, "a4-3");
  const GbeResult r = gbe(a43.point, kFourThirds, kDefaultMaxIterations);
  ASSERT_EQ(r.iterations, 2);
  EXPECT_EQ(r.steps[1].run.result.bound, make_rational(10, 7));
  EXPECT_EQ(r.steps[2].run.result.bound, kFourThirds);
}

TEST(Gbe, ColdStartReachesSameBound) {
  GbeOptions cold;
  cold.warm_start = false;
  for (const auto& f : family4_fixtures()) {
    EXPECT_LE(gbe(f.point, kFourThirds, kDefaultMaxIterations, cold).bound, kFourThirds) << f.name;
  }
}

TEST(Gbe, Deterministic) {
  for (const auto& f : all_fixtures()) {
    const GbeResult a = gbe(f.point, kFourThirds, kDefaultMaxIterations);
    const GbeResult b = gbe(f.point, kFourThirds, kDefaultMaxIterations);
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
      EXPECT_EQ(certificate_to_json(a.steps[i].run.certificate), certificate_to_json(b.steps[i].run.certificate));
    }
  }
}

TEST(Selection, PicksAMaximalConstant) {
  for (const auto& f : all_fixtures()) {
    const GbRun run = gb(f.point);
    const Edge e = select_expansion_edge(f.point, run.result);
    for (const auto& [g, c] : run.result.constants) {
      if (g == e) EXPECT_EQ(c, run.result.c_star) << f.name;
    }
  }
}

TEST(CInvariance, LiftingKeepsOtherConstants) {
  for (const auto& f : all_fixtures()) {
    SCOPED_TRACE(f.name);
    const DualAssignment mu = solve_opt2(f.point).mu;
    const auto ones = f.point.one_edges();
    for (const Edge& e1 : ones) {
      for (int d = 1; d <= 2; ++d) {
        const SepPoint y = expand_one_edge(f.point, e1, d);
        const DualAssignment lifted = lift_dual_assignment(mu, f.point, e1, d);
        for (const Edge& e2 : ones) {
          if (e2 == e1) continue;
          EXPECT_EQ(compute_C(y, lifted, e2), compute_C(f.point, mu, e2));
        }
      }
    }
  }
}

// Gap+ of a successor never exceeds the ancestor's bound, and Gap+ grows
// along every BB-move.
TEST(Successors, SoundAndMonotone) {
  std::mt19937 rng(11);
  for (const auto& f : all_fixtures()) {
    SCOPED_TRACE(f.name);
    const Rational bound = gb(f.point).result.bound;
    for (int trial = 0; trial < 10; ++trial) {
      const auto exp = random_expansions(f.point, 6, rng);
      SepPoint cur = f.point;
      Rational prev_gap = 1 / solve_opt2(cur).value;
      for (const auto& [e, d] : exp) {
        Node tail = e.u;
        for (int i = 0; i < d; ++i) {
          const Node fresh = cur.n();
          cur = bb_move(cur, Edge(tail, e.v));
          tail = fresh;
          const Rational gap = 1 / solve_opt2(cur).value;
          EXPECT_GE(gap, prev_gap);
          prev_gap = gap;
        }
      }
      EXPECT_EQ(cur, expand(f.point, exp));
      EXPECT_LE(prev_gap, bound);
      if (cur.n() <= kMaxDirectVertexCheck) EXPECT_TRUE(is_vertex(cur).is_vertex);
    }
  }
}
