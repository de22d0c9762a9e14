#pragma once

#include <optional>
#include <span>
#include <vector>

#include "majcl/rational.hpp"

namespace majcl {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::Equal;
  Rational rhs;
};

/// A dense linear program over exact rationals.
///
/// Every variable starts with lower bound 0 and no upper bound; a missing
/// lower bound (nullopt) makes the variable free below.
struct LinearProgram {
  explicit LinearProgram(int vars = 0);

  int num_vars;
  std::vector<Constraint> constraints;
  std::vector<std::optional<Rational>> lower_bounds;
  std::vector<std::optional<Rational>> upper_bounds;
  std::vector<Rational> objective;
  Sense sense = Sense::Maximize;

  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> point;  // set when Optimal
  Rational value;               // set when Optimal
  /// For an infeasible program in pure equality form (all rows Equal, all
  /// variables bounded below by 0 and unbounded above): y with yᵀA ≤ 0 on
  /// every column and yᵀb > 0.
  std::optional<std::vector<Rational>> farkas;
};

/// Two-phase dense tableau simplex with Bland's rule. Deterministic; the
/// returned optimal point is re-checked against every constraint.
LpOutcome solve(const LinearProgram& lp);

struct MarginOutcome {
  bool feasible = false;
  std::optional<std::vector<Rational>> witness;
  Rational margin;
};

/// Maximizes the last variable (the margin ε) and reports whether its optimum
/// is strictly positive. Strict rows are expected as `... - ε ≥ rhs`.
MarginOutcome max_margin_feasible(const LinearProgram& lp);

bool is_pure_equality_form(const LinearProgram& lp);

/// True iff `point` satisfies every row and bound with zero residual.
bool satisfies(const LinearProgram& lp, std::span<const Rational> point);

/// True iff y certifies infeasibility of the pure equality form of lp.
bool check_farkas(const LinearProgram& lp, std::span<const Rational> y);

}  // namespace majcl
