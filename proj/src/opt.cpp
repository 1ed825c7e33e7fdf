#include "gapbound/opt.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "gapbound/error.hpp"
#include "held_karp.hpp"

namespace gapbound {

Rational total_weight(const DualAssignment& mu) {
  Rational s = 0;
  for (const auto& [w, v] : mu) s += v;
  return s;
}

namespace {

std::vector<Rational> walk_column(const WeightedGraph& g, const Walk& w) {
  std::vector<Rational> col(g.edge_count(), 0);
  for (const auto& [e, m] : w.multiplicities()) {
    const auto idx = g.index_of(e);
    if (!idx) throw Error(ErrorCode::InvalidArgument, "walk leaves the support graph");
    col[*idx] = m;
  }
  return col;
}

}  // namespace

Opt2Result solve_opt2(const SepPoint& x, const Opt2Options& options) {
  const WeightedGraph g = support_graph(x);
  const std::size_t m = g.edge_count();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "empty support");

  LinearProgram lp;
  lp.sense = Sense::Maximize;
  for (const auto& [e, w] : g.edges) lp.rows.push_back({{}, Relation::LessEqual, w});
  SimplexSolver solver(lp, options.rule);

  std::vector<Walk> columns;
  auto add = [&](const Walk& w) {
    if (std::find(columns.begin(), columns.end(), w) != columns.end()) return false;
    if (!is_valid_walk(g, w).valid) throw Error(ErrorCode::InvalidArgument, "starting column is not a walk");
    solver.add_column(walk_column(g, w), Rational(1));
    columns.push_back(w);
    return true;
  };
  for (const auto& w : options.initial_walks) add(w);
  add(doubled_tree_walk(g));
  add(min_cost_walk(g).walk);

  Opt2Result out;
  while (true) {
    const LpSolution sol = solver.solve();
    if (sol.status != LpStatus::Optimal) {
      throw Error(ErrorCode::Unbounded, "restricted model is not optimal");
    }
    ++out.rounds;
    WeightedGraph costs = g;
    for (std::size_t i = 0; i < m; ++i) costs.edges[i].second = sol.duals[i];
    const PricedWalk priced = min_cost_walk(costs);
    if (priced.cost < 1) {
      if (!add(priced.walk)) {
        throw Error(ErrorCode::RowGenerationStalled, "row generation stalled: walk of cost " +
                                                         to_string(priced.cost) + " already present");
      }
      continue;
    }
    out.value = sol.value;
    out.costs = std::move(costs);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (sol.primal[j] != 0) out.mu.emplace(columns[j], sol.primal[j]);
    }
    out.columns = columns.size();
    return out;
  }
}

OptPlusResult solve_opt_plus_full(const SepPoint& x, PivotRule rule) {
  const int n = x.n();
  if (n > kMaxFullModelNodes) {
    throw Error(ErrorCode::DimensionTooLarge, "n too large for full model");
  }
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "full model needs at least 3 nodes");
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) {
      index[i][j] = index[j][i] = edges.size();
      edges.emplace_back(i, j);
    }
  }
  const std::size_t m = edges.size();
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  for (const auto& e : edges) lp.rows.push_back({{}, Relation::LessEqual, x.weight(e)});
  SimplexSolver solver(lp, rule);

  // lambda_ijk: -1 on ij, +1 on ik and jk
  for (const auto& e : edges) {
    for (Node k = 0; k < n; ++k) {
      if (e.has(k)) continue;
      std::vector<Rational> col(m, 0);
      col[index[e.u][e.v]] = -1;
      col[index[e.u][k]] = 1;
      col[index[e.v][k]] = 1;
      solver.add_column(col, Rational(0));
    }
  }
  // tours fixing node 0 first and order[1] < order.back()
  std::vector<Node> order(n - 1);
  std::iota(order.begin(), order.end(), 1);
  do {
    if (order.front() > order.back()) continue;
    std::vector<Rational> col(m, 0);
    Node prev = 0;
    for (Node v : order) {
      col[index[prev][v]] = 1;
      prev = v;
    }
    col[index[prev][0]] = 1;
    solver.add_column(col, Rational(1));
  } while (std::next_permutation(order.begin(), order.end()));

  const LpSolution sol = solver.solve();
  if (sol.status != LpStatus::Optimal) throw Error(ErrorCode::Unbounded, "full model is not optimal");
  OptPlusResult out;
  out.value = sol.value;
  std::vector<std::pair<Edge, Rational>> c;
  for (std::size_t i = 0; i < m; ++i) c.emplace_back(edges[i], sol.duals[i]);
  out.costs = WeightedGraph(n, std::move(c));
  return out;
}

DualCheck verify_dual_feasible(const SepPoint& x, const DualAssignment& mu) {
  DualCheck out;
  std::map<Edge, Rational> load;
  for (const auto& [w, v] : mu) {
    if (v < 0) {
      out.feasible = false;
      out.message = "negative walk weight " + to_string(v);
      return out;
    }
    for (const auto& [e, m] : w.multiplicities()) {
      if (x.weight(e) == 0) {
        out.feasible = false;
        out.edge = e;
        out.slack = 0;
        out.message = "walk uses edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside the support";
        return out;
      }
      load[e] += m * v;
    }
  }
  for (const auto& [e, l] : load) {
    const Rational slack = x.weight(e) - l;
    if (slack < 0) {
      out.feasible = false;
      out.edge = e;
      out.slack = slack;
      out.message = "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") overloaded by " + to_string(-slack);
      return out;
    }
  }
  return out;
}

DualAssignment lift_dual_assignment(const DualAssignment& mu, const SepPoint& x, const Edge& e, int d) {
  if (x.weight(e) != 1) {
    throw Error(ErrorCode::NotOneEdge, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not a 1-edge");
  }
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative expansion count");
  DualAssignment out;
  for (const auto& [w, v] : mu) {
    const int m = w.at(e);
    if (m == 0) {
      const Rational share = v / (d + 1);
      for (int k = 0; k <= d; ++k) out[extend_walk(w, x.n(), e, d, 0, k)] += share;
    } else {
      out[extend_walk(w, x.n(), e, d, m)] += v;
    }
  }
  return out;
}

namespace {

template <class T>
Rational tsp_typed(const WeightedGraph& g, const std::vector<T>& cost, const Integer& den) {
  std::vector<std::vector<T>> d(g.n, std::vector<T>(g.n, T(0)));
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i].first;
    d[e.u][e.v] = d[e.v][e.u] = cost[i];
  }
  const auto tour = detail::held_karp(d);
  return Rational(Integer(tour.cost)) / den;
}

}  // namespace

Rational tsp_exact(const WeightedGraph& complete_costs) {
  const WeightedGraph& g = complete_costs;
  if (g.n > kMaxTspNodes) throw Error(ErrorCode::DimensionTooLarge, "n too large for the TSP routine");
  if (g.n < 1) return 0;
  if (g.edge_count() != static_cast<std::size_t>(g.n) * (g.n - 1) / 2) {
    throw Error(ErrorCode::InvalidArgument, "TSP routine needs a complete cost graph");
  }
  std::vector<Rational> costs;
  for (const auto& [e, c] : g.edges) costs.push_back(c);
  const Integer den = common_denominator(costs);
  std::vector<Integer> scaled(costs.size());
  Integer bound = 0;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    scaled[i] = costs[i].get_num() * (den / costs[i].get_den());
    bound += abs(scaled[i]);
  }
  if (bound * (g.n + 1) < Integer(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::int64_t> small(scaled.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) small[i] = scaled[i].get_si();
    return tsp_typed(g, small, den);
  }
  return tsp_typed(g, scaled, den);
}

}  // namespace gapbound
