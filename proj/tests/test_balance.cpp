#include <doctest.h>

#include "fixtures.hpp"
#include "majcl/balance.hpp"
#include "majcl/prob_matrix.hpp"

using namespace majcl;
using namespace fixtures;

namespace {

// Reachability by repeated relaxation, independent of the library's SCC code.
bool edge_on_cycle(const ChoiceFunction& c, Edge e) {
  const int n = c.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Vertex> stack{e.to};
  seen[static_cast<std::size_t>(e.to)] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (v == e.from) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (w != v && c.has_edge(v, w) && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace

TEST_CASE("is_balanced") {
  CHECK(is_balanced(c3()));
  CHECK_FALSE(is_balanced(t3()));
  for (std::uint64_t code = 0; code < 64; ++code) CHECK_FALSE(is_balanced(ChoiceFunction::from_full_code(4, code)));
  CHECK(is_balanced(r5()));
}

TEST_CASE("is_balanced_matrix and is_super_balanced") {
  CHECK(is_balanced_matrix(ProbMatrix(4)));
  CHECK(is_super_balanced(ProbMatrix(4)));
  CHECK(is_balanced_matrix(prob_of(c3())));
  CHECK_FALSE(is_balanced_matrix(prob_of(t3())));
  CHECK_FALSE(is_super_balanced(prob_of(c3())));
  const std::vector<WeightedMatrix> halves{{half(), prob_of(c3())}, {half(), prob_of(dual(c3()))}};
  CHECK(is_super_balanced(convex_combine(halves)));
}

TEST_CASE("is_pseudo_balanced") {
  CHECK(is_pseudo_balanced(c3()));
  CHECK_FALSE(is_pseudo_balanced(t3()));
  CHECK(is_pseudo_balanced(empty()));
  CHECK_FALSE(is_pseudo_balanced(single_edge()));
  CHECK(is_pseudo_balanced(r5()));
}

TEST_CASE("strong components") {
  const auto scc = strong_components(t3());
  CHECK(scc.components.size() == 3);
  CHECK(scc.inter_edges.size() == 3);
  const auto r = strong_components(r5());
  CHECK(r.components.size() == 1);
  CHECK(r.inter_edges.empty());
}

TEST_CASE("pseudo-balance by components agrees with per-edge reachability at n=4") {
  for (std::uint64_t code = 0; code < 729; ++code) {
    const auto c = ChoiceFunction::from_ternary_code(4, code);
    bool all_on_cycles = true;
    for (const auto& e : c.edges()) all_on_cycles = all_on_cycles && edge_on_cycle(c, e);
    CHECK(is_pseudo_balanced(c) == all_on_cycles);
    CHECK(is_pseudo_balanced_by_paths(c) == all_on_cycles);
  }
}

TEST_CASE("shortest_cycle_through") {
  const auto cyc = shortest_cycle_through(c3(), {0, 1});
  REQUIRE(cyc.has_value());
  CHECK(*cyc == std::vector<Vertex>{0, 1, 2});
  CHECK_FALSE(shortest_cycle_through(t3(), {0, 1}).has_value());

  const auto five = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(*shortest_cycle_through(five, {2, 3}) == std::vector<Vertex>{2, 3, 4, 0, 1});

  // 0 -> 1 closes through either 2 or 3; the lexicographically least is kept.
  const auto two_ways = make(4, {{0, 1}, {1, 2}, {1, 3}, {2, 0}, {3, 0}});
  CHECK(*shortest_cycle_through(two_ways, {0, 1}) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("partition balance") {
  CHECK(is_partition_plus_balanced(c3()));
  CHECK_FALSE(is_partition_plus_balanced(t3()));
  CHECK(partition_plus_violation(t3()) == std::uint32_t{1});
  CHECK_FALSE(is_partition_plus_balanced(empty()));

  CHECK(is_partition_balanced(empty()));
  CHECK(is_partition_balanced(c3()));
  CHECK_FALSE(is_partition_balanced(t3()));
  CHECK(partition_violation(t3()) == std::uint32_t{1});

  Limits small;
  small.subset_cap = 4;
  CHECK(kind_of([&] { is_partition_balanced(r5(), small); }) == ErrorKind::TooManyCandidates);
}

TEST_CASE("weight balance") {
  const auto c = weight_balance(c3());
  CHECK(c.weight_balanced);
  CHECK(c.margin == half());
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness == prob_of(c3()));

  CHECK_FALSE(is_weight_balanced(t3()));
  const auto e = weight_balance(empty());
  CHECK(e.weight_balanced);
  CHECK(*e.witness == ProbMatrix(3));
}

TEST_CASE("weight-balance witnesses are balanced and majority-exact at n=4") {
  for (std::uint64_t code = 0; code < 729; ++code) {
    const auto c = ChoiceFunction::from_ternary_code(4, code);
    const auto wb = weight_balance(c);
    CHECK(wb.weight_balanced == is_pseudo_balanced(c));
    if (wb.weight_balanced) {
      CHECK(wb.margin > 0);
      CHECK(is_balanced_matrix(*wb.witness));
      CHECK(maj(*wb.witness) == c);
    }
  }
}
