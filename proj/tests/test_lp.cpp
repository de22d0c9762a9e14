#include <doctest.h>

#include "fixtures.hpp"
#include "majcl/balance.hpp"
#include "majcl/lp.hpp"
#include "majcl/realizability.hpp"

using namespace majcl;
using namespace fixtures;

TEST_CASE("bounded single variable") {
  LinearProgram lp(1);
  lp.upper_bounds[0] = q(1, 3);
  lp.objective = {q(1)};
  const auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == q(1, 3));
  CHECK(out.point == std::vector<Rational>{q(1, 3)});
}

TEST_CASE("contradictory bounds are infeasible") {
  LinearProgram lp(1);
  lp.add({q(1)}, Relation::GreaterEqual, q(1));
  lp.add({q(1)}, Relation::LessEqual, q(0));
  CHECK(solve(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded objective") {
  LinearProgram lp(2);
  lp.objective = {q(1), q(1)};
  lp.add({q(1), q(-1)}, Relation::Equal, q(0));
  CHECK(solve(lp).status == LpStatus::Unbounded);
}

TEST_CASE("free and shifted variables") {
  LinearProgram lp(2);
  lp.lower_bounds[0] = std::nullopt;
  lp.lower_bounds[1] = q(-2);
  lp.upper_bounds[1] = q(5);
  lp.sense = Sense::Minimize;
  lp.objective = {q(1), q(1)};
  lp.add({q(1), q(0)}, Relation::GreaterEqual, q(-7, 2));
  const auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == q(-11, 2));
  CHECK(satisfies(lp, out.point));
}

TEST_CASE("malformed rows are rejected") {
  LinearProgram lp(2);
  lp.add({q(1)}, Relation::Equal, q(0));
  CHECK(kind_of([&] { solve(lp); }) == ErrorKind::MalformedProgram);
}

TEST_CASE("maximizing the V*1 mass of the T3 certificate system") {
  // Weights over V*0 = {(0,0),(0,1),(1,1)} then V*1 = {(0,0),(1,0),(1,1)}.
  const std::vector<std::pair<long, long>> pts{{0, 0}, {0, 1}, {1, 1}, {0, 0}, {1, 0}, {1, 1}};
  LinearProgram lp(6);
  std::vector<Rational> ones(6, q(1)), xs, ys;
  for (auto [a, b] : pts) {
    xs.push_back(q(a));
    ys.push_back(q(b));
  }
  lp.add(ones, Relation::Equal, q(1));
  lp.add(xs, Relation::Equal, half());
  lp.add(ys, Relation::Equal, half());
  lp.objective = {0, 0, 0, 1, 1, 1};
  const auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.value == 1);
}

TEST_CASE("max_margin_feasible") {
  // t - e >= 1/2, t <= 1.
  LinearProgram open(2);
  open.add({q(1), q(-1)}, Relation::GreaterEqual, half());
  open.upper_bounds[0] = q(1);
  const auto a = max_margin_feasible(open);
  CHECK(a.feasible);
  CHECK(a.margin == half());

  LinearProgram tie(2);
  tie.add({q(1), q(-1)}, Relation::GreaterEqual, half());
  tie.add({q(1), q(0)}, Relation::Equal, half());
  const auto b = max_margin_feasible(tie);
  CHECK_FALSE(b.feasible);
  CHECK(b.margin == 0);
}

TEST_CASE("identical programs give identical points") {
  const auto systems = certificate_systems(l4());
  LinearProgram lp = systems.above;
  lp.objective.assign(static_cast<std::size_t>(lp.num_vars), q(1));
  lp.sense = Sense::Minimize;
  const auto first = solve(lp);
  const auto second = solve(lp);
  CHECK(first.status == second.status);
  CHECK(first.point == second.point);
}

TEST_CASE("Farkas witnesses for infeasible equality systems") {
  // x + y = 1, x + y = 2 with x, y >= 0.
  LinearProgram lp(2);
  lp.add({q(1), q(1)}, Relation::Equal, q(1));
  lp.add({q(1), q(1)}, Relation::Equal, q(2));
  REQUIRE(is_pure_equality_form(lp));
  const auto out = solve(lp);
  REQUIRE(out.status == LpStatus::Infeasible);
  REQUIRE(out.farkas.has_value());
  CHECK(check_farkas(lp, *out.farkas));

  // x - y = -1 with x, y >= 0 is feasible; x + y = -1 is not.
  LinearProgram neg(2);
  neg.add({q(1), q(1)}, Relation::Equal, q(-1));
  const auto n = solve(neg);
  REQUIRE(n.farkas.has_value());
  CHECK(check_farkas(neg, *n.farkas));
  CHECK_FALSE(check_farkas(neg, std::vector<Rational>{q(1)}));

  const auto refutation = certificate_systems(c3());
  for (const auto* sys : {&refutation.above, &refutation.below}) {
    const auto s = solve(*sys);
    REQUIRE(s.status == LpStatus::Infeasible);
    REQUIRE(s.farkas.has_value());
    CHECK(check_farkas(*sys, *s.farkas));
  }
}

TEST_CASE("weight-balance program for T3 has no positive margin") {
  CHECK_FALSE(is_weight_balanced(t3()));
}
