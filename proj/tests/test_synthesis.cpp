#include <doctest.h>

#include "fixtures.hpp"
#include "majcl/balance.hpp"
#include "majcl/permutation.hpp"
#include "majcl/prob_matrix.hpp"
#include "majcl/realizability.hpp"
#include "majcl/synthesis.hpp"
#include "majcl/valency.hpp"
#include "majcl/verify.hpp"

using namespace majcl;
using namespace fixtures;

namespace {

// Induced matrix with the given ordered entries and ½ everywhere else.
ProbMatrix with_entries(int n, std::initializer_list<std::pair<Edge, Rational>> entries) {
  ProbMatrix t(n);
  for (const auto& [e, v] : entries) t.set(e.from, e.to, v);
  return t;
}

void check_voters_in_family(const ChoiceFunction& d, const IntegerProfile& p) {
  for (const auto& v : p.voters()) CHECK(find_relabeling(d, v.voter).has_value());
}

void check_voters_in_family(const ChoiceFunction& d, const WeightedProfile& p) {
  for (const auto& v : p.voters()) CHECK(find_relabeling(d, v.voter).has_value());
}

IntegerProfile counted(int n, std::initializer_list<std::pair<ChoiceFunction, long>> list) {
  std::vector<CountedVoter> voters;
  for (const auto& [c, m] : list) voters.push_back({c, Integer(m)});
  return IntegerProfile(n, voters);
}

}  // namespace

TEST_CASE("pair_bias_profile for T3") {
  const auto p = pair_bias_profile(t3(), 0, 1);
  const WeightedProfile expected(3, {{t3(), half()}, {make(3, {{2, 0}, {0, 1}, {2, 1}}), half()}});
  CHECK(p == expected);
  CHECK(p.induced_matrix() == with_entries(3, {{{0, 1}, q(1)}}));

  const auto swapped = pair_bias_profile(t3(), 1, 0);
  CHECK(swapped == apply_permutation(p, Permutation({1, 0, 2})));
  CHECK(swapped.induced_matrix().at(1, 0) == 1);
}

TEST_CASE("pair_bias_profile for L4") {
  const auto p = pair_bias_profile(l4(), 0, 1);
  CHECK(p.voters().size() == 2);
  for (const auto& v : p.voters()) CHECK(v.weight == half());
  CHECK(p.induced_matrix() == with_entries(4, {{{0, 1}, q(1)}}));
  check_voters_in_family(l4(), p);
}

TEST_CASE("pair_bias_profile needs an unbalanced generator") {
  CHECK(kind_of([] { pair_bias_profile(c3(), 0, 1); }) == ErrorKind::BalancedFamily);
}

TEST_CASE("pair bias raises exactly one entry for every unbalanced generator at n=4") {
  for (std::uint64_t code = 0; code < 64; code += 3) {
    const auto d = ChoiceFunction::from_full_code(4, code);
    for (Vertex x = 0; x < 4; ++x) {
      for (Vertex y = 0; y < 4; ++y) {
        if (x == y) continue;
        const auto t = pair_bias_profile(d, x, y).induced_matrix();
        CHECK(t.at(x, y) > half());
        for (Vertex u = 0; u < 4; ++u) {
          for (Vertex v = u + 1; v < 4; ++v) {
            if (!((u == x && v == y) || (u == y && v == x))) CHECK(t.at(u, v) == half());
          }
        }
      }
    }
  }
}

TEST_CASE("triangle_profile") {
  const auto a = triangle_profile(c3(), 0, 1, 2);
  CHECK(a == WeightedProfile(3, {{c3(), q(1)}}));
  CHECK(a.induced_matrix() == prob_of(c3()));

  const auto b = triangle_profile(c3(), 0, 2, 1);
  CHECK(b == WeightedProfile(3, {{dual(c3()), q(1)}}));

  const auto r = triangle_profile(r5(), 0, 1, 2);
  CHECK(r.voters().size() == 2);
  for (const auto& v : r.voters()) CHECK(v.weight == half());
  CHECK(r.induced_matrix() == with_entries(5, {{{0, 1}, q(1)}, {{1, 2}, q(1)}, {{2, 0}, q(1)}}));
  check_voters_in_family(r5(), r);

  CHECK(kind_of([] { triangle_profile(t3(), 0, 1, 2); }) == ErrorKind::NotBalanced);
  CHECK(kind_of([] { triangle_profile(c3(), 0, 1, 1); }) == ErrorKind::RepeatedVertex);
}

TEST_CASE("cycle_profile") {
  const std::vector<Vertex> tri{0, 1, 2};
  CHECK(cycle_profile(c3(), tri) == triangle_profile(c3(), 0, 1, 2));

  const std::vector<Vertex> four{0, 1, 2, 3};
  const auto t4 = cycle_profile(r5(), four).induced_matrix();
  CHECK(t4 == with_entries(5, {{{0, 1}, q(3, 4)}, {{1, 2}, q(3, 4)}, {{2, 3}, q(3, 4)}, {{3, 0}, q(3, 4)}}));
  CHECK(t4.at(0, 2) == half());

  const std::vector<Vertex> five{0, 1, 2, 3, 4};
  const auto t5 = cycle_profile(r5(), five).induced_matrix();
  for (Vertex i = 0; i < 5; ++i) {
    // Each edge sits in one of the three fan triangles: 1/3 + (2/3)(1/2).
    CHECK(t5.at(i, (i + 1) % 5) == q(2, 3));
    CHECK(t5.at(i, (i + 2) % 5) == half());
  }
  CHECK(is_balanced_matrix(t5));

  const std::vector<Vertex> two{0, 1};
  CHECK(kind_of([&] { cycle_profile(r5(), two); }) == ErrorKind::TooShort);
  const std::vector<Vertex> repeat{0, 1, 0};
  CHECK(kind_of([&] { cycle_profile(r5(), repeat); }) == ErrorKind::RepeatedVertex);
}

TEST_CASE("cycle edge values over every simple cycle length in R5") {
  const std::vector<std::vector<Vertex>> cycles{{0, 1, 2}, {0, 1, 2, 3}, {0, 1, 2, 3, 4}, {4, 2, 0, 3, 1}};
  for (const auto& cyc : cycles) {
    const auto t = cycle_profile(r5(), cyc).induced_matrix();
    const Rational edge = half() + Rational(1) / Rational(2 * (static_cast<long>(cyc.size()) - 2));
    const int len = static_cast<int>(cyc.size());
    for (Vertex u = 0; u < 5; ++u) {
      for (Vertex v = 0; v < 5; ++v) {
        if (u == v) continue;
        bool on_cycle = false;
        for (int i = 0; i < len; ++i) on_cycle = on_cycle || (cyc[i] == u && cyc[(i + 1) % len] == v);
        bool reverse = false;
        for (int i = 0; i < len; ++i) reverse = reverse || (cyc[i] == v && cyc[(i + 1) % len] == u);
        if (on_cycle) {
          CHECK(t.at(u, v) == edge);
        } else if (!reverse) {
          CHECK(t.at(u, v) == half());
        }
      }
    }
    CHECK(is_balanced_matrix(t));
  }
}

TEST_CASE("tie_profile") {
  CHECK(tie_profile(c3()) == counted(3, {{c3(), 3}, {dual(c3()), 3}}));
  const auto t = tie_profile(t3());
  CHECK(t.voters().size() == 6);
  for (const auto& v : t.voters()) CHECK(v.multiplicity == 1);
  for (std::uint64_t code = 0; code < 1024; code += 37) {
    const auto d = ChoiceFunction::from_full_code(5, code);
    CHECK(verify(tie_profile(d), empty(5)).pass);
  }
}

TEST_CASE("rationalize") {
  const auto a = t3();
  const auto b = c3();
  const auto c = dual(c3());
  CHECK(rationalize(WeightedProfile(3, {{a, q(1, 3)}, {b, q(2, 3)}})) == counted(3, {{a, 1}, {b, 2}}));
  CHECK(rationalize(WeightedProfile(3, {{a, q(1, 2)}, {b, q(1, 3)}, {c, q(1, 6)}})) ==
        counted(3, {{a, 3}, {b, 2}, {c, 1}}));
  CHECK(rationalize(WeightedProfile(3, {{a, q(1)}})) == counted(3, {{a, 1}}));
}

TEST_CASE("realize_target") {
  // The three 2-voter bias blocks share voters; merged, they are the
  // Condorcet profile.
  const auto p = realize_target(t3(), c3());
  CHECK(p.total() == 3);
  const auto report = verify(p, c3());
  CHECK(report.pass);
  for (const auto& tally : report.per_pair) {
    CHECK(tally.winner_count / Rational(p.total()) == q(2, 3));
    CHECK(tally.loser_count / Rational(p.total()) == q(1, 3));
  }
  check_voters_in_family(t3(), p);

  const auto partial = realize_target(t3(), single_edge());
  const auto r = verify(partial, single_edge());
  CHECK(r.pass);
  int ties = 0;
  for (const auto& tally : r.per_pair) ties += tally.outcome == PairOutcome::Tie;
  CHECK(ties == 2);

  for (std::uint64_t code = 0; code < 64; code += 5) {
    const auto d = ChoiceFunction::from_full_code(4, code);
    CHECK(verify(realize_target(d, d), d).pass);
  }

  CHECK(kind_of([] { realize_target(c3(), t3()); }) == ErrorKind::NotRealizable);
}

TEST_CASE("realize_balanced_target") {
  const auto five = make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto trace = realize_target_traced(r5(), five);
  CHECK(trace.stages.size() == 2);
  REQUIRE(trace.final.has_value());
  CHECK(verify(*trace.final, five).pass);
  check_voters_in_family(r5(), *trace.final);

  CHECK(realize_balanced_target(c3(), c3()) == counted(3, {{c3(), 1}}));
  CHECK(realize_target(r5(), empty(5)) == tie_profile(r5()));
  CHECK(kind_of([] { realize_balanced_target(c3(), t3()); }) == ErrorKind::NotPseudoBalanced);
  CHECK(kind_of([] { realize_balanced_target(t3(), c3()); }) == ErrorKind::NotBalanced);
}

TEST_CASE("every strong n=5 target is realized from R5") {
  for (std::uint64_t code = 0; code < 1024; code += 9) {
    const auto c = ChoiceFunction::from_full_code(5, code);
    if (!is_pseudo_balanced(c)) continue;
    const auto p = realize_target(r5(), c);
    CHECK(verify(p, c).pass);
  }
}

TEST_CASE("mcgarvey_classic") {
  const auto cyc = mcgarvey_classic(3, c3());
  CHECK(cyc.total() == 6);
  const auto r = verify(cyc, c3());
  CHECK(r.pass);
  for (const auto& tally : r.per_pair) CHECK(tally.winner_count - tally.loser_count == 2);

  const auto single = mcgarvey_classic(3, single_edge());
  CHECK(single.total() == 2);
  CHECK(verify(single, single_edge()).pass);

  CHECK(mcgarvey_classic(5, r5()).total() == 20);
}

TEST_CASE("classic and synthesized profiles share majorities over linear orders") {
  for (int n = 3; n <= 4; ++n) {
    std::uint64_t count = 1;
    for (std::size_t p = 0; p < pair_count(n); ++p) count *= 3;
    for (std::uint64_t code = 0; code < count; code += n == 3 ? 1 : 11) {
      const auto c = ChoiceFunction::from_ternary_code(n, code);
      CHECK(majority_of_profile(mcgarvey_classic(n, c)) == majority_of_profile(realize_target(linear_order(n), c)));
    }
  }
}

TEST_CASE("rationalizing preserves the majority of the weighted profile") {
  for (std::uint64_t code = 0; code < 27; ++code) {
    const auto c = ChoiceFunction::from_ternary_code(3, code);
    const auto trace = realize_target_traced(t3(), c);
    for (const auto& stage : trace.stages) CHECK(stage.profile.induced_matrix() == stage.induced);
    CHECK(majority_of_profile(*trace.final) == maj(trace.stages.back().induced));
  }
}
