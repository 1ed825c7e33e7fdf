#include "gapbound/gap_bounding.hpp"

#include "gapbound/error.hpp"
#include "gapbound/polytope.hpp"

namespace gapbound {

Rational compute_C(const SepPoint& x, const DualAssignment& mu, const Edge& e) {
  if (x.weight(e) != 1) {
    throw Error(ErrorCode::NotOneEdge, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not a 1-edge");
  }
  Rational c = 0;
  for (const auto& [w, v] : mu) c += (w.at(e) == 1 ? 1 : 2) * v;
  return c;
}

GbRun gb(const SepPoint& x, const GbOptions& options) {
  const auto ones = x.one_edges();
  if (ones.empty()) throw Error(ErrorCode::NoOneEdges, "point has no 1-edges");
  Opt2Options opt;
  opt.initial_walks = options.initial_walks;
  opt.rule = options.rule;
  Opt2Result solved = solve_opt2(x, opt);

  GbRun run;
  GapBoundResult& r = run.result;
  r.opt2_value = solved.value;
  r.gap_plus = 1 / solved.value;
  bool first = true;
  for (const Edge& e : ones) {
    Rational c = compute_C(x, solved.mu, e);
    if (c < 1) {
      throw Error(ErrorCode::ConstantBelowOne, "C on edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                                   ") is " + to_string(c) + " < 1");
    }
    if (first || c > r.c_star) r.c_star = c;
    first = false;
    r.constants.emplace_back(e, std::move(c));
  }
  r.bound = r.c_star * r.gap_plus;
  run.certificate.point = x;
  run.certificate.costs = std::move(solved.costs);
  run.certificate.mu = std::move(solved.mu);
  run.certificate.result = r;
  run.certificate.scope = "every successor of the ancestor of this point";
  return run;
}

Edge select_expansion_edge(const SepPoint& x, const GapBoundResult& result) {
  const auto lab = canonical_labeling(support_graph(x));
  auto key = [&](const Edge& e) {
    const Node a = lab.label[e.u];
    const Node b = lab.label[e.v];
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < result.constants.size(); ++i) {
    if (!best) {
      best = i;
      continue;
    }
    const auto& [e, c] = result.constants[i];
    const auto& [be, bc] = result.constants[*best];
    if (c > bc || (c == bc && key(e) < key(be))) best = i;
  }
  if (!best) throw Error(ErrorCode::NoOneEdges, "point has no 1-edges");
  return result.constants[*best].first;
}

GbeResult gbe(const SepPoint& x, const Rational& alpha, int max_iter, const GbeOptions& options) {
  if (max_iter < 0) throw Error(ErrorCode::InvalidArgument, "negative iteration limit");
  GbeResult out;
  GbOptions gb_options;
  gb_options.rule = options.rule;
  out.steps.push_back({x, std::nullopt, gb(x, gb_options)});
  out.bound = out.steps.back().run.result.bound;
  while (out.bound > alpha && out.iterations < max_iter) {
    const GbeStep& last = out.steps.back();
    const Edge e = select_expansion_edge(last.point, last.run.result);
    GbOptions next_options;
    next_options.rule = options.rule;
    if (options.warm_start) {
      for (const auto& [w, v] : lift_dual_assignment(last.run.certificate.mu, last.point, e, 1)) {
        next_options.initial_walks.push_back(w);
      }
    }
    SepPoint next = bb_move(last.point, e);
    GbRun run = gb(next, next_options);
    ++out.iterations;
    if (run.result.bound < out.bound) {
      out.bound = run.result.bound;
      out.best = out.steps.size();
    }
    out.steps.push_back({std::move(next), e, std::move(run)});
  }
  return out;
}

}  // namespace gapbound
