#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gapbound/graph.hpp"
#include "gapbound/lp.hpp"
#include "gapbound/walks.hpp"

namespace gapbound {

/// mu over walks of a support graph; only positive entries are stored.
using DualAssignment = std::map<Walk, Rational>;

Rational total_weight(const DualAssignment& mu);

struct Opt2Options {
  /// Extra starting columns (for instance walks lifted from a predecessor).
  std::vector<Walk> initial_walks;
  PivotRule rule = PivotRule::Bland;
};

struct Opt2Result {
  Rational value;
  /// Optimal primal costs on the support edges (edge labels are c_e).
  WeightedGraph costs;
  DualAssignment mu;
  std::size_t columns = 0;  // walks in the final restricted model
  std::size_t rounds = 0;   // pricing rounds
};

/// Maximizes sum mu_w subject to sum_w w_e mu_w <= x_e on the support, by
/// generating walks with the walk oracle until no walk prices below 1. The
/// row duals of the final model are the primal costs.
Opt2Result solve_opt2(const SepPoint& x, const Opt2Options& options = {});

inline constexpr int kMaxFullModelNodes = 8;

struct OptPlusResult {
  Rational value;
  WeightedGraph costs;  // complete graph
};

/// The model with every triangle multiplier and every tour of K_n as
/// columns. Throws DimensionTooLarge for n > kMaxFullModelNodes.
OptPlusResult solve_opt_plus_full(const SepPoint& x, PivotRule rule = PivotRule::DantzigThenBland);

struct DualCheck {
  bool feasible = true;
  std::optional<Edge> edge;
  Rational slack;  // x_e - load_e on the reported edge
  std::string message;
};

/// Checks mu >= 0, that every walk stays on the support and that the load
/// of every support edge is at most x_e.
DualCheck verify_dual_feasible(const SepPoint& x, const DualAssignment& mu);

/// Carries mu to the point where the 1-edge e carries d new internal nodes
/// (see expand_one_edge). Walks using e once or twice keep their weight;
/// each walk avoiding e is split into d + 1 walks of equal weight.
DualAssignment lift_dual_assignment(const DualAssignment& mu, const SepPoint& x, const Edge& e, int d);

inline constexpr int kMaxTspNodes = 18;

/// Held-Karp over a complete cost graph.
Rational tsp_exact(const WeightedGraph& complete_costs);

}  // namespace gapbound
