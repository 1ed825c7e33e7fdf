#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gapbound/opt.hpp"

namespace gapbound {

/// 2 * (weight of walks avoiding e) + (weight of walks using e once)
/// + 2 * (weight of walks using e twice). Throws NotOneEdge.
Rational compute_C(const SepPoint& x, const DualAssignment& mu, const Edge& e);

struct GapBoundResult {
  Rational opt2_value;
  Rational gap_plus;  // 1 / opt2_value
  std::vector<std::pair<Edge, Rational>> constants;  // one per 1-edge, edge order
  Rational c_star;
  Rational bound;  // c_star * gap_plus
};

/// Everything needed to re-check a bound without solving an LP.
struct GapBoundCertificate {
  SepPoint point;
  WeightedGraph costs;  // primal costs on the support edges
  DualAssignment mu;
  GapBoundResult result;
  std::string scope;
};

struct GbRun {
  GapBoundResult result;
  GapBoundCertificate certificate;
};

struct GbOptions {
  std::vector<Walk> initial_walks;
  PivotRule rule = PivotRule::Bland;
};

/// Solves the walk model, evaluates C on every 1-edge and returns
/// C* / (optimal value). Throws ConstantBelowOne when some C < 1 and
/// NoOneEdges when x has no 1-edge.
GbRun gb(const SepPoint& x, const GbOptions& options = {});

/// 1-edge with the largest C; ties go to the edge whose endpoints come first
/// under the canonical labeling of the support graph.
Edge select_expansion_edge(const SepPoint& x, const GapBoundResult& result);

struct GbeStep {
  SepPoint point;
  std::optional<Edge> split;  // edge of the previous point that was split
  GbRun run;
};

struct GbeResult {
  Rational bound;
  int iterations = 0;
  std::vector<GbeStep> steps;
  std::size_t best = 0;  // step attaining the bound (first one on ties)
};

struct GbeOptions {
  /// Seed each inner solve with the lifted walks of the previous one.
  bool warm_start = true;
  PivotRule rule = PivotRule::Bland;
};

/// Repeats GB on successive BB-moves while the bound exceeds alpha and
/// fewer than max_iter moves have been made.
GbeResult gbe(const SepPoint& x, const Rational& alpha, int max_iter, const GbeOptions& options = {});

inline constexpr int kDefaultMaxIterations = 10;

}  // namespace gapbound
