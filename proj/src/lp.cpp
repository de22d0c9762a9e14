#include "majcl/lp.hpp"

#include "majcl/error.hpp"

namespace majcl {

LinearProgram::LinearProgram(int vars)
    : num_vars(vars),
      lower_bounds(static_cast<std::size_t>(vars), Rational(0)),
      upper_bounds(static_cast<std::size_t>(vars)),
      objective(static_cast<std::size_t>(vars), Rational(0)) {}

void LinearProgram::add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
  constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

namespace {

void validate(const LinearProgram& lp) {
  const auto n = static_cast<std::size_t>(lp.num_vars);
  if (lp.num_vars < 1) throw Error(ErrorKind::MalformedProgram, "program needs at least one variable");
  if (lp.lower_bounds.size() != n || lp.upper_bounds.size() != n || lp.objective.size() != n) {
    throw Error(ErrorKind::MalformedProgram, "bound or objective length differs from num_vars");
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (lp.constraints[i].coefficients.size() != n) {
      throw Error(ErrorKind::MalformedProgram, "row " + std::to_string(i) + " has " +
                                                   std::to_string(lp.constraints[i].coefficients.size()) +
                                                   " coefficients, expected " + std::to_string(n));
    }
  }
}

// x_j = offset + sign * column (+ second column with the opposite sign when free)
struct VarMap {
  Rational offset;
  int column = -1;
  int sign = 1;
  int negative_column = -1;
};

struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // structural + slack + artificial; rhs stored separately
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  std::vector<Rational> reduced;  // d_j = c_j - c_B B^-1 A_j
  Rational neg_value;             // -(c_B B^-1 b)
  std::vector<std::size_t> basis;
  std::vector<bool> allowed;      // may enter the basis

  void pivot(std::size_t r, std::size_t e) {
    const Rational p = a[r][e];
    if (p != 1) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(a[r][j]) != 0) a[r][j] /= p;
      }
      rhs[r] /= p;
    }
    auto eliminate = [&](std::vector<Rational>& row, Rational& row_rhs) {
      if (sgn(row[e]) == 0) return;
      const Rational factor = row[e];
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(a[r][j]) != 0) row[j] -= factor * a[r][j];
      }
      row_rhs -= factor * rhs[r];
    };
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r) eliminate(a[i], rhs[i]);
    }
    eliminate(reduced, neg_value);
    basis[r] = e;
  }

  // Bland's rule. Returns false when the program is unbounded.
  bool optimize() {
    for (;;) {
      std::size_t entering = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (allowed[j] && sgn(reduced[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == cols) return true;
      std::size_t leaving = rows;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows; ++i) {
        if (sgn(a[i][entering]) <= 0) continue;
        Rational ratio = rhs[i] / a[i][entering];
        if (leaving == rows || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows) return false;
      pivot(leaving, entering);
    }
  }

  void drop_row(std::size_t r) {
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(r));
    rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
    --rows;
  }
};

Rational row_value(std::span<const Rational> coefficients, std::span<const Rational> point) {
  Rational sum = 0;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (sgn(coefficients[j]) != 0) sum += coefficients[j] * point[j];
  }
  return sum;
}

}  // namespace

bool is_pure_equality_form(const LinearProgram& lp) {
  for (const auto& row : lp.constraints) {
    if (row.relation != Relation::Equal) return false;
  }
  for (std::size_t j = 0; j < static_cast<std::size_t>(lp.num_vars); ++j) {
    if (!lp.lower_bounds[j] || sgn(*lp.lower_bounds[j]) != 0 || lp.upper_bounds[j]) return false;
  }
  return true;
}

bool satisfies(const LinearProgram& lp, std::span<const Rational> point) {
  if (point.size() != static_cast<std::size_t>(lp.num_vars)) return false;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (lp.lower_bounds[j] && point[j] < *lp.lower_bounds[j]) return false;
    if (lp.upper_bounds[j] && point[j] > *lp.upper_bounds[j]) return false;
  }
  for (const auto& row : lp.constraints) {
    const Rational lhs = row_value(row.coefficients, point);
    switch (row.relation) {
      case Relation::LessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != row.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  return true;
}

bool check_farkas(const LinearProgram& lp, std::span<const Rational> y) {
  if (!is_pure_equality_form(lp) || y.size() != lp.constraints.size()) return false;
  for (std::size_t j = 0; j < static_cast<std::size_t>(lp.num_vars); ++j) {
    Rational column = 0;
    for (std::size_t i = 0; i < y.size(); ++i) column += y[i] * lp.constraints[i].coefficients[j];
    if (sgn(column) > 0) return false;
  }
  Rational yb = 0;
  for (std::size_t i = 0; i < y.size(); ++i) yb += y[i] * lp.constraints[i].rhs;
  return sgn(yb) > 0;
}

LpOutcome solve(const LinearProgram& lp) {
  validate(lp);
  const auto n = static_cast<std::size_t>(lp.num_vars);

  // Substitute bounded/free variables by nonnegative columns.
  std::vector<VarMap> vars(n);
  std::size_t structural = 0;
  struct BoundRow {
    std::size_t column;
    Rational limit;
  };
  std::vector<BoundRow> bound_rows;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& lo = lp.lower_bounds[j];
    const auto& hi = lp.upper_bounds[j];
    VarMap& v = vars[j];
    if (lo) {
      v.offset = *lo;
      v.column = static_cast<int>(structural++);
      if (hi) bound_rows.push_back({static_cast<std::size_t>(v.column), *hi - *lo});
    } else if (hi) {
      v.offset = *hi;
      v.sign = -1;
      v.column = static_cast<int>(structural++);
    } else {
      v.column = static_cast<int>(structural++);
      v.negative_column = static_cast<int>(structural++);
    }
  }

  // Rows over structural columns, then one slack per inequality.
  struct StdRow {
    std::vector<Rational> coeffs;
    Relation relation;
    Rational rhs;
  };
  std::vector<StdRow> std_rows;
  std_rows.reserve(lp.constraints.size() + bound_rows.size());
  for (const auto& row : lp.constraints) {
    StdRow out{std::vector<Rational>(structural, Rational(0)), row.relation, row.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& coef = row.coefficients[j];
      if (sgn(coef) == 0) continue;
      out.rhs -= coef * vars[j].offset;
      out.coeffs[static_cast<std::size_t>(vars[j].column)] += vars[j].sign * coef;
      if (vars[j].negative_column >= 0) out.coeffs[static_cast<std::size_t>(vars[j].negative_column)] -= coef;
    }
    std_rows.push_back(std::move(out));
  }
  for (const auto& b : bound_rows) {
    StdRow out{std::vector<Rational>(structural, Rational(0)), Relation::LessEqual, b.limit};
    out.coeffs[b.column] = 1;
    std_rows.push_back(std::move(out));
  }

  std::size_t slacks = 0;
  for (const auto& r : std_rows) slacks += r.relation != Relation::Equal;
  const std::size_t m = std_rows.size();
  const std::size_t real_cols = structural + slacks;

  Tableau t;
  t.rows = m;
  t.cols = real_cols + m;
  t.a.assign(m, std::vector<Rational>(t.cols, Rational(0)));
  t.rhs.resize(m);
  t.basis.resize(m);
  t.allowed.assign(t.cols, true);
  std::vector<int> row_sign(m, 1);
  {
    std::size_t slack = structural;
    for (std::size_t i = 0; i < m; ++i) {
      auto& src = std_rows[i];
      for (std::size_t j = 0; j < structural; ++j) t.a[i][j] = src.coeffs[j];
      if (src.relation == Relation::LessEqual) t.a[i][slack++] = 1;
      if (src.relation == Relation::GreaterEqual) t.a[i][slack++] = -1;
      t.rhs[i] = src.rhs;
      if (sgn(t.rhs[i]) < 0) {
        row_sign[i] = -1;
        for (std::size_t j = 0; j < real_cols; ++j) t.a[i][j] = -t.a[i][j];
        t.rhs[i] = -t.rhs[i];
      }
      t.a[i][real_cols + i] = 1;
      t.basis[i] = real_cols + i;
    }
  }

  // Phase 1: minimize the sum of artificials.
  t.reduced.assign(t.cols, Rational(0));
  t.neg_value = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < real_cols; ++j) {
      if (sgn(t.a[i][j]) != 0) t.reduced[j] -= t.a[i][j];
    }
    t.neg_value -= t.rhs[i];
  }
  t.optimize();

  LpOutcome outcome;
  if (sgn(t.neg_value) != 0) {
    outcome.status = LpStatus::Infeasible;
    if (is_pure_equality_form(lp)) {
      std::vector<Rational> y(m);
      for (std::size_t i = 0; i < m; ++i) y[i] = row_sign[i] * (1 - t.reduced[real_cols + i]);
      if (!check_farkas(lp, y)) {
        throw Error(ErrorKind::InternalCheckFailed, "phase-1 dual is not a Farkas certificate");
      }
      outcome.farkas = std::move(y);
    }
    return outcome;
  }

  // Drive zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows;) {
    if (t.basis[i] < real_cols) {
      ++i;
      continue;
    }
    std::size_t entering = real_cols;
    for (std::size_t j = 0; j < real_cols; ++j) {
      if (sgn(t.a[i][j]) != 0) {
        entering = j;
        break;
      }
    }
    if (entering == real_cols) {
      t.drop_row(i);
    } else {
      t.pivot(i, entering);
      ++i;
    }
  }
  for (std::size_t j = real_cols; j < t.cols; ++j) t.allowed[j] = false;

  // Phase 2 in minimization form.
  std::vector<Rational> cost(t.cols, Rational(0));
  const int direction = lp.sense == Sense::Maximize ? -1 : 1;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational c = direction * lp.objective[j];
    cost[static_cast<std::size_t>(vars[j].column)] += vars[j].sign * c;
    if (vars[j].negative_column >= 0) cost[static_cast<std::size_t>(vars[j].negative_column)] -= c;
  }
  t.reduced = cost;
  t.neg_value = 0;
  for (std::size_t i = 0; i < t.rows; ++i) {
    const Rational& cb = cost[t.basis[i]];
    if (sgn(cb) == 0) continue;
    for (std::size_t j = 0; j < t.cols; ++j) {
      if (sgn(t.a[i][j]) != 0) t.reduced[j] -= cb * t.a[i][j];
    }
    t.neg_value -= cb * t.rhs[i];
  }
  if (!t.optimize()) {
    outcome.status = LpStatus::Unbounded;
    return outcome;
  }

  std::vector<Rational> column_value(t.cols, Rational(0));
  for (std::size_t i = 0; i < t.rows; ++i) column_value[t.basis[i]] = t.rhs[i];
  outcome.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational x = vars[j].offset + vars[j].sign * column_value[static_cast<std::size_t>(vars[j].column)];
    if (vars[j].negative_column >= 0) x -= column_value[static_cast<std::size_t>(vars[j].negative_column)];
    outcome.point[j] = std::move(x);
  }
  if (!satisfies(lp, outcome.point)) {
    throw Error(ErrorKind::InternalCheckFailed, "simplex returned a point violating a constraint");
  }
  outcome.status = LpStatus::Optimal;
  outcome.value = row_value(lp.objective, outcome.point);
  return outcome;
}

MarginOutcome max_margin_feasible(const LinearProgram& lp) {
  LinearProgram program = lp;
  validate(program);
  std::fill(program.objective.begin(), program.objective.end(), Rational(0));
  program.objective.back() = 1;
  program.sense = Sense::Maximize;
  const LpOutcome outcome = solve(program);
  MarginOutcome result;
  switch (outcome.status) {
    case LpStatus::Infeasible:
      return result;
    case LpStatus::Unbounded:
      result.feasible = true;
      return result;
    case LpStatus::Optimal:
      result.margin = outcome.value;
      result.feasible = sgn(outcome.value) > 0;
      result.witness = outcome.point;
      return result;
  }
  return result;
}

}  // namespace majcl
