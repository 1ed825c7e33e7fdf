#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gapbound/rational.hpp"

namespace gapbound {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Bland is the default. The Dantzig variant picks the most negative reduced
/// cost and falls back to Bland for good after a run of degenerate pivots.
enum class PivotRule { Bland, DantzigThenBland };

struct LpRow {
  std::vector<Rational> coeffs;  // dense, one entry per variable
  Relation relation = Relation::GreaterEqual;
  Rational rhs;
};

struct LinearProgram {
  Sense sense = Sense::Minimize;
  std::vector<Rational> objective;
  /// One entry per variable; nullopt marks a free variable.
  std::vector<std::optional<Rational>> lower_bounds;
  std::vector<LpRow> rows;

  std::size_t variable_count() const { return objective.size(); }
  /// Adds a variable with the given cost and lower bound; existing rows get
  /// a zero coefficient. Returns its index.
  std::size_t add_variable(const Rational& cost, std::optional<Rational> lower = Rational(0));
  void add_row(std::vector<Rational> coeffs, Relation relation, const Rational& rhs);
};

/// Signs follow the usual convention: for a minimization a >= row has a
/// nonnegative dual and a <= row a nonpositive one; both flip for a
/// maximization. reduced_costs[j] = c_j - y . A_j.
struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  std::vector<Rational> primal;
  Rational value;
  std::vector<Rational> duals;
  std::vector<Rational> reduced_costs;
  std::vector<bool> tight;
  /// Infeasible: row multipliers y with the dual sign pattern, y . A_j <= 0
  /// for bounded columns (= 0 for free ones) and y . (b - A l) > 0.
  std::vector<Rational> farkas;
  /// Unbounded: feasible direction d over the variables improving the
  /// objective.
  std::vector<Rational> ray;
  std::size_t pivots = 0;
};

struct LpCheck {
  bool ok = true;
  std::string message;
};

/// Independent verification of a solution against its model: primal and dual
/// feasibility plus equal objective values for Optimal, the certificate
/// conditions otherwise.
LpCheck check_lp_solution(const LinearProgram& lp, const LpSolution& sol);

/// Dense two-phase tableau simplex over exact rationals. After an optimal
/// solve further columns can be added; the next solve() restarts from the
/// current basis.
class SimplexSolver {
 public:
  explicit SimplexSolver(LinearProgram lp, PivotRule rule = PivotRule::Bland);
  ~SimplexSolver();
  SimplexSolver(SimplexSolver&&) noexcept;
  SimplexSolver& operator=(SimplexSolver&&) noexcept;

  /// Solves and certifies the result with check_lp_solution; a failed check
  /// throws std::logic_error.
  LpSolution solve();
  /// Adds a variable with lower bound 0. Only valid after an optimal solve
  /// or before the first one.
  std::size_t add_column(const std::vector<Rational>& coeffs, const Rational& cost);
  const LinearProgram& model() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

LpSolution simplex_solve(const LinearProgram& lp, PivotRule rule = PivotRule::Bland);

}  // namespace gapbound
