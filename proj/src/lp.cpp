#include "gapbound/lp.hpp"

#include <stdexcept>
#include <utility>

#include "gapbound/error.hpp"

namespace gapbound {

std::size_t LinearProgram::add_variable(const Rational& cost, std::optional<Rational> lower) {
  objective.push_back(cost);
  lower_bounds.push_back(std::move(lower));
  for (auto& r : rows) r.coeffs.emplace_back(0);
  return objective.size() - 1;
}

void LinearProgram::add_row(std::vector<Rational> coeffs, Relation relation, const Rational& rhs) {
  if (coeffs.size() != objective.size()) {
    throw Error(ErrorCode::InvalidArgument, "row length differs from variable count");
  }
  rows.push_back({std::move(coeffs), relation, rhs});
}

namespace {

std::optional<Rational> lower_of(const LinearProgram& lp, std::size_t j) {
  if (lp.lower_bounds.empty()) return Rational(0);
  return lp.lower_bounds.at(j);
}

Rational row_activity(const LpRow& row, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
    if (row.coeffs[j] != 0 && x[j] != 0) s += row.coeffs[j] * x[j];
  }
  return s;
}

bool satisfies(Relation rel, const Rational& lhs, const Rational& rhs) {
  switch (rel) {
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    case Relation::Equal: return lhs == rhs;
  }
  return false;
}

std::string fail_at(const std::string& what, std::size_t i) { return what + " " + std::to_string(i); }

LpCheck primal_feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.variable_count()) return {false, "primal vector has wrong length"};
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto l = lower_of(lp, j);
    if (l && x[j] < *l) return {false, fail_at("lower bound violated by variable", j)};
  }
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (!satisfies(lp.rows[i].relation, row_activity(lp.rows[i], x), lp.rows[i].rhs)) {
      return {false, fail_at("primal row violated:", i)};
    }
  }
  return {};
}

// Sign a row multiplier must have in a minimization (flipped for max).
bool dual_sign_ok(Relation rel, const Rational& y, bool maximize) {
  const int s = sgn(y) * (maximize ? -1 : 1);
  switch (rel) {
    case Relation::GreaterEqual: return s >= 0;
    case Relation::LessEqual: return s <= 0;
    case Relation::Equal: return true;
  }
  return false;
}

Rational column_dot(const LinearProgram& lp, const std::vector<Rational>& y, std::size_t j) {
  Rational s = 0;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (y[i] != 0 && lp.rows[i].coeffs[j] != 0) s += y[i] * lp.rows[i].coeffs[j];
  }
  return s;
}

}  // namespace

LpCheck check_lp_solution(const LinearProgram& lp, const LpSolution& sol) {
  const std::size_t n = lp.variable_count();
  const std::size_t m = lp.rows.size();
  const bool maximize = lp.sense == Sense::Maximize;

  if (sol.status == LpStatus::Infeasible) {
    const auto& y = sol.farkas;
    if (y.size() != m) return {false, "Farkas vector has wrong length"};
    for (std::size_t i = 0; i < m; ++i) {
      if (!dual_sign_ok(lp.rows[i].relation, y[i], false)) return {false, fail_at("Farkas sign wrong on row", i)};
    }
    Rational yb = 0;
    for (std::size_t i = 0; i < m; ++i) yb += y[i] * lp.rows[i].rhs;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational ya = column_dot(lp, y, j);
      const auto l = lower_of(lp, j);
      if (!l) {
        if (ya != 0) return {false, fail_at("Farkas combination nonzero on free column", j)};
        continue;
      }
      if (ya > 0) return {false, fail_at("Farkas combination positive on column", j)};
      yb -= ya * *l;
    }
    if (yb <= 0) return {false, "Farkas right-hand side not positive"};
    return {};
  }

  if (sol.status == LpStatus::Unbounded) {
    if (auto c = primal_feasible(lp, sol.primal); !c.ok) return c;
    const auto& d = sol.ray;
    if (d.size() != n) return {false, "ray has wrong length"};
    for (std::size_t j = 0; j < n; ++j) {
      if (lower_of(lp, j) && d[j] < 0) return {false, fail_at("ray leaves lower bound of variable", j)};
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!satisfies(lp.rows[i].relation, row_activity(lp.rows[i], d), Rational(0))) {
        return {false, fail_at("ray violates row", i)};
      }
    }
    Rational cd = 0;
    for (std::size_t j = 0; j < n; ++j) cd += lp.objective[j] * d[j];
    if (maximize ? cd <= 0 : cd >= 0) return {false, "ray does not improve the objective"};
    return {};
  }

  if (auto c = primal_feasible(lp, sol.primal); !c.ok) return c;
  if (sol.duals.size() != m) return {false, "dual vector has wrong length"};
  Rational primal_value = 0;
  for (std::size_t j = 0; j < n; ++j) primal_value += lp.objective[j] * sol.primal[j];
  if (primal_value != sol.value) return {false, "stated value differs from c.x"};
  Rational dual_value = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!dual_sign_ok(lp.rows[i].relation, sol.duals[i], maximize)) return {false, fail_at("dual sign wrong on row", i)};
    dual_value += sol.duals[i] * lp.rows[i].rhs;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Rational r = lp.objective[j] - column_dot(lp, sol.duals, j);
    const auto l = lower_of(lp, j);
    if (!l) {
      if (r != 0) return {false, fail_at("reduced cost nonzero on free variable", j)};
      continue;
    }
    if (maximize ? r > 0 : r < 0) return {false, fail_at("reduced cost has wrong sign on variable", j)};
    dual_value += r * *l;
  }
  if (dual_value != primal_value) {
    return {false, "duality gap " + to_string(primal_value - dual_value)};
  }
  return {};
}

struct SimplexSolver::Impl {
  enum class Kind { Structural, Slack, Artificial };
  struct Column {
    Kind kind;
    std::size_t var;  // original variable (structural) or row (slack, artificial)
    int sign;         // structural: +1, or -1 for the negative half of a free variable
  };

  LinearProgram lp;
  PivotRule rule;
  bool maximize = false;
  bool built = false;
  bool optimal = false;

  std::vector<Column> cols;
  std::vector<int> row_sign;  // original row = row_sign * standard row
  std::vector<std::vector<Rational>> t;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basis;
  std::vector<std::size_t> unit;  // column holding e_i in the starting basis
  std::vector<Rational> cost;     // current phase costs
  std::vector<Rational> d;        // reduced costs
  std::vector<char> allowed;
  std::size_t pivots = 0;
  bool bland = true;

  Impl(LinearProgram model, PivotRule r) : lp(std::move(model)), rule(r) {
    if (lp.lower_bounds.empty()) lp.lower_bounds.assign(lp.objective.size(), Rational(0));
    if (lp.lower_bounds.size() != lp.objective.size()) {
      throw Error(ErrorCode::InvalidArgument, "lower bound count differs from variable count");
    }
    for (const auto& row : lp.rows) {
      if (row.coeffs.size() != lp.objective.size()) {
        throw Error(ErrorCode::InvalidArgument, "row length differs from variable count");
      }
    }
    maximize = lp.sense == Sense::Maximize;
  }

  Rational min_cost(std::size_t var) const { return maximize ? Rational(-lp.objective[var]) : lp.objective[var]; }

  Rational phase2_cost(const Column& c) const {
    if (c.kind != Kind::Structural) return 0;
    return c.sign * min_cost(c.var);
  }

  void build() {
    const std::size_t m = lp.rows.size();
    const std::size_t n = lp.variable_count();
    for (std::size_t j = 0; j < n; ++j) {
      cols.push_back({Kind::Structural, j, 1});
      if (!lp.lower_bounds[j]) cols.push_back({Kind::Structural, j, -1});
    }
    row_sign.assign(m, 1);
    rhs.assign(m, 0);
    std::vector<Relation> rel(m);
    for (std::size_t i = 0; i < m; ++i) {
      Rational b = lp.rows[i].rhs;
      for (std::size_t j = 0; j < n; ++j) {
        if (lp.lower_bounds[j] && lp.rows[i].coeffs[j] != 0) b -= lp.rows[i].coeffs[j] * *lp.lower_bounds[j];
      }
      rel[i] = lp.rows[i].relation;
      if (b < 0) {
        row_sign[i] = -1;
        b = -b;
        if (rel[i] == Relation::LessEqual) {
          rel[i] = Relation::GreaterEqual;
        } else if (rel[i] == Relation::GreaterEqual) {
          rel[i] = Relation::LessEqual;
        }
      }
      rhs[i] = b;
    }
    const std::size_t structural = cols.size();
    t.assign(m, std::vector<Rational>(structural, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < structural; ++k) {
        const auto& c = cols[k];
        const Rational& a = lp.rows[i].coeffs[c.var];
        if (a != 0) t[i][k] = row_sign[i] * c.sign * a;
      }
    }
    unit.assign(m, 0);
    basis.assign(m, 0);
    auto push_column = [&](Kind kind, std::size_t row, int value) {
      const std::size_t idx = cols.size();
      cols.push_back({kind, row, 1});
      for (std::size_t i = 0; i < m; ++i) t[i].emplace_back(i == row ? value : 0);
      return idx;
    };
    for (std::size_t i = 0; i < m; ++i) {
      if (rel[i] == Relation::LessEqual) {
        unit[i] = push_column(Kind::Slack, i, 1);
      } else {
        if (rel[i] == Relation::GreaterEqual) push_column(Kind::Slack, i, -1);
        unit[i] = push_column(Kind::Artificial, i, 1);
      }
      basis[i] = unit[i];
    }
    allowed.assign(cols.size(), 1);
    built = true;
  }

  void price() {
    d.assign(cols.size(), 0);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      Rational v = cost[k];
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (cost[basis[i]] != 0 && t[i][k] != 0) v -= cost[basis[i]] * t[i][k];
      }
      d[k] = std::move(v);
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    const Rational inv = 1 / t[r][j];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (t[r][k] != 0) {
        t[r][k] *= inv;
        nz.push_back(k);
      }
    }
    rhs[r] *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][j] == 0) continue;
      const Rational f = t[i][j];
      for (std::size_t k : nz) t[i][k] -= f * t[r][k];
      if (rhs[r] != 0) rhs[i] -= f * rhs[r];
    }
    if (d[j] != 0) {
      const Rational f = d[j];
      for (std::size_t k : nz) d[k] -= f * t[r][k];
    }
    basis[r] = j;
    ++pivots;
  }

  // Returns the entering column on an unbounded direction, or nullopt at an
  // optimum.
  std::optional<std::size_t> iterate() {
    bland = rule == PivotRule::Bland;
    int degenerate_run = 0;
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (!allowed[k] || d[k] >= 0) continue;
        if (!enter || (!bland && d[k] < d[*enter])) enter = k;
        if (bland) break;
      }
      if (!enter) return std::nullopt;
      const std::size_t j = *enter;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][j] <= 0) continue;
        Rational ratio = rhs[i] / t[i][j];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          best = std::move(ratio);
          leave = i;
        }
      }
      if (!leave) return j;
      if (best == 0) {
        if (++degenerate_run > 50) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(*leave, j);
    }
  }

  std::vector<Rational> standard_values() const {
    std::vector<Rational> z(cols.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) z[basis[i]] = rhs[i];
    return z;
  }

  std::vector<Rational> original_values(const std::vector<Rational>& z, bool shift) const {
    std::vector<Rational> x(lp.variable_count(), 0);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k].kind == Kind::Structural && z[k] != 0) x[cols[k].var] += cols[k].sign * z[k];
    }
    if (shift) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (lp.lower_bounds[j]) x[j] += *lp.lower_bounds[j];
      }
    }
    return x;
  }

  // y for the standard rows in the current phase, mapped to the original rows
  // and the original objective sense.
  std::vector<Rational> row_multipliers(bool objective_sense) const {
    std::vector<Rational> y(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Rational v = (cost[unit[i]] - d[unit[i]]) * row_sign[i];
      if (objective_sense && maximize) v = -v;
      y[i] = std::move(v);
    }
    return y;
  }

  LpSolution finish_optimal() {
    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.primal = original_values(standard_values(), true);
    sol.value = 0;
    for (std::size_t j = 0; j < sol.primal.size(); ++j) sol.value += lp.objective[j] * sol.primal[j];
    sol.duals = row_multipliers(true);
    sol.reduced_costs.resize(lp.variable_count());
    for (std::size_t j = 0; j < lp.variable_count(); ++j) {
      sol.reduced_costs[j] = lp.objective[j] - column_dot(lp, sol.duals, j);
    }
    sol.tight.resize(lp.rows.size());
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
      sol.tight[i] = row_activity(lp.rows[i], sol.primal) == lp.rows[i].rhs;
    }
    sol.pivots = pivots;
    optimal = true;
    return sol;
  }

  LpSolution solve() {
    if (!built) {
      build();
      bool any_artificial = false;
      cost.assign(cols.size(), 0);
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (cols[k].kind == Kind::Artificial) {
          cost[k] = 1;
          allowed[k] = 0;
          any_artificial = true;
        }
      }
      if (any_artificial) {
        price();
        iterate();  // phase 1 is bounded below by 0
        Rational infeasibility = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
          if (cols[basis[i]].kind == Kind::Artificial) infeasibility += rhs[i];
        }
        if (infeasibility > 0) {
          LpSolution sol;
          sol.status = LpStatus::Infeasible;
          sol.farkas = row_multipliers(false);
          sol.pivots = pivots;
          return sol;
        }
        drive_out_artificials();
      }
      for (std::size_t k = 0; k < cols.size(); ++k) cost[k] = phase2_cost(cols[k]);
      price();
    }
    if (auto ray_col = iterate()) {
      LpSolution sol;
      sol.status = LpStatus::Unbounded;
      sol.primal = original_values(standard_values(), true);
      std::vector<Rational> dir(cols.size(), 0);
      dir[*ray_col] = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) dir[basis[i]] = -t[i][*ray_col];
      sol.ray = original_values(dir, false);
      Rational value = 0;
      for (std::size_t j = 0; j < sol.primal.size(); ++j) value += lp.objective[j] * sol.primal[j];
      sol.value = value;
      sol.pivots = pivots;
      optimal = false;
      return sol;
    }
    return finish_optimal();
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (cols[basis[i]].kind != Kind::Artificial) continue;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (cols[k].kind != Kind::Artificial && t[i][k] != 0) {
          pivot(i, k);
          break;
        }
      }
      // a row without such a column is redundant; its artificial stays at 0
    }
  }

  std::size_t add_column(const std::vector<Rational>& coeffs, const Rational& c) {
    if (coeffs.size() != lp.rows.size()) throw Error(ErrorCode::InvalidArgument, "column length differs from row count");
    if (built && !optimal) throw Error(ErrorCode::InvalidArgument, "columns can only be added at an optimum");
    const std::size_t var = lp.add_variable(c, Rational(0));
    for (std::size_t i = 0; i < lp.rows.size(); ++i) lp.rows[i].coeffs[var] = coeffs[i];
    if (!built) return var;
    const std::size_t k = cols.size();
    cols.push_back({Kind::Structural, var, 1});
    allowed.push_back(1);
    std::vector<Rational> std_col(lp.rows.size());
    for (std::size_t i = 0; i < lp.rows.size(); ++i) std_col[i] = row_sign[i] * coeffs[i];
    Rational reduced = phase2_cost(cols[k]);
    for (std::size_t i = 0; i < t.size(); ++i) {
      Rational v = 0;
      for (std::size_t r = 0; r < std_col.size(); ++r) {
        if (std_col[r] != 0 && t[i][unit[r]] != 0) v += t[i][unit[r]] * std_col[r];
      }
      if (cost[basis[i]] != 0 && v != 0) reduced -= cost[basis[i]] * v;
      t[i].push_back(std::move(v));
    }
    cost.push_back(phase2_cost(cols[k]));
    d.push_back(std::move(reduced));
    return var;
  }
};

SimplexSolver::SimplexSolver(LinearProgram lp, PivotRule rule) : impl_(std::make_unique<Impl>(std::move(lp), rule)) {}
SimplexSolver::~SimplexSolver() = default;
SimplexSolver::SimplexSolver(SimplexSolver&&) noexcept = default;
SimplexSolver& SimplexSolver::operator=(SimplexSolver&&) noexcept = default;

LpSolution SimplexSolver::solve() {
  LpSolution sol = impl_->solve();
  const LpCheck check = check_lp_solution(impl_->lp, sol);
  if (!check.ok) throw std::logic_error("simplex result failed certification: " + check.message);
  return sol;
}

std::size_t SimplexSolver::add_column(const std::vector<Rational>& coeffs, const Rational& cost) {
  return impl_->add_column(coeffs, cost);
}

const LinearProgram& SimplexSolver::model() const { return impl_->lp; }

LpSolution simplex_solve(const LinearProgram& lp, PivotRule rule) {
  SimplexSolver solver(lp, rule);
  return solver.solve();
}

}  // namespace gapbound
