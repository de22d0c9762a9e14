// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "majcl/balance.hpp"
#include "majcl/enumerate.hpp"
#include "majcl/lp.hpp"
#include "majcl/prob_matrix.hpp"
#include "majcl/realizability.hpp"
#include "majcl/synthesis.hpp"
#include "majcl/valency.hpp"
#include "majcl/verify.hpp"

using namespace majcl;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::uint64_t ternary_count(int n) {
  std::uint64_t count = 1;
  for (std::size_t p = 0; p < pair_count(n); ++p) count *= 3;
  return count;
}

std::uint64_t full_count(int n) { return std::uint64_t{1} << pair_count(n); }

Outcome theorem_n3() {
  Outcome o;
  const std::set<ChoiceFunction, CodeLess> balanced_targets{ChoiceFunction(3), rotational(3), dual(rotational(3))};
  int agreements = 0;
  for (std::uint64_t g = 0; g < full_count(3); ++g) {
    const auto d = ChoiceFunction::from_full_code(3, g);
    std::set<ChoiceFunction, CodeLess> realizable;
    for (std::uint64_t code = 0; code < ternary_count(3); ++code) {
      const auto c = ChoiceFunction::from_ternary_code(3, code);
      const bool decided = decide_membership(d, c).member;
      const bool oracle = oracle_membership(d, c);
      agreements += decided == oracle;
      o.require(decided == oracle, "decide/oracle disagree on " + describe(d) + " vs " + describe(c));
      if (decided) realizable.insert(c);
    }
    if (is_balanced(d)) {
      o.require(realizable == balanced_targets, "balanced generator realizes the wrong set");
    } else {
      o.require(realizable.size() == 27, "unbalanced generator misses a target");
    }
  }
  o.require(agreements == 216, "expected 216 agreements");
  if (o.pass) o.detail = "216/216 agree; 6 transitive generators realize 27, 2 cyclic realize 3";
  return o;
}

Outcome theorem_n4() {
  Outcome o;
  const auto decide = enumerate_check(4, EnumerationMode::DecideVsOracle);
  o.require(decide.disagreements.empty(), "decide-vs-oracle disagreements");
  o.require(decide.families_tested == 64 && decide.targets_tested == 64, "scope is not 64x64");
  o.require(decide.realizable_count == 64 * 64, "some full target not realizable");
  const auto synth = enumerate_check(4, EnumerationMode::SynthesizeAll);
  o.require(synth.disagreements.empty(), "synthesized profile failed verification");
  o.require(synth.agreements == 64 * 64, "expected 64 verified profiles per generator");
  if (o.pass) o.detail = "4096 pairs agree; 64 verified profiles for each of 64 generators";
  return o;
}

Outcome balanced_n5() {
  Outcome o;
  const auto r5 = rotational(5);
  std::vector<ChoiceFunction> realizable, rejected;
  for (std::uint64_t code = 0; code < full_count(5); ++code) {
    const auto c = ChoiceFunction::from_full_code(5, code);
    const bool member = decide_membership(r5, c).member;
    const bool strong = strong_components(c).components.size() == 1;
    o.require(member == strong, "membership differs from strong connectivity at " + describe(c));
    (member ? realizable : rejected).push_back(c);
  }
  o.require(realizable.size() == 544, "expected 544 realizable targets, got " + std::to_string(realizable.size()));

  std::mt19937_64 rng(2024);
  std::shuffle(realizable.begin(), realizable.end(), rng);
  std::shuffle(rejected.begin(), rejected.end(), rng);
  for (std::size_t i = 0; i < 20 && i < realizable.size(); ++i) {
    const auto p = realize_target(r5, realizable[i]);
    o.require(verify(p, realizable[i]).pass, "synthesized profile fails for " + describe(realizable[i]));
  }
  for (std::size_t i = 0; i < 20 && i < rejected.size(); ++i) {
    o.require(!oracle_membership(r5, rejected[i]), "oracle accepts non-strong " + describe(rejected[i]));
  }
  if (o.pass) o.detail = "544/1024 realizable = strong; 20 synthesized and verified; 20 rejected by the oracle";
  return o;
}

Outcome mcgarvey_baseline() {
  Outcome o;
  for (std::uint64_t code = 0; code < full_count(5); ++code) {
    const auto c = ChoiceFunction::from_full_code(5, code);
    const auto p = mcgarvey_classic(5, c);
    o.require(p.total() == 20, "voter count is not 20 for " + describe(c));
    const auto report = verify(p, c);
    o.require(report.pass, "classic profile fails for " + describe(c));
    for (const auto& t : report.per_pair) o.require(t.winner_count - t.loser_count == 2, "margin is not 2");
  }
  if (o.pass) o.detail = "1024 tournaments, 20 voters each, margin exactly 2";
  return o;
}

Outcome condorcet() {
  Outcome o;
  std::vector<CountedVoter> voters;
  for (const std::vector<Vertex>& r : {std::vector<Vertex>{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
    voters.push_back({linear_order_from_ranking(r), Integer(1)});
  }
  const auto m = majority_of_profile(IntegerProfile(3, voters));
  const std::vector<Edge> cycle{{1, 0}, {2, 1}, {0, 2}};
  o.require(m == make_choice_function(3, cycle), "majority is " + describe(m));
  if (o.pass) o.detail = "rankings 0>1>2, 1>2>0, 2>0>1 give the cycle 0>1>2>0";
  return o;
}

Outcome identities() {
  Outcome o;
  for (int n = 3; n <= 4; ++n) {
    for (std::uint64_t code = 0; code < ternary_count(n); ++code) {
      const auto c = ChoiceFunction::from_ternary_code(n, code);
      o.require(maj(prob_of(c)) == c, "maj(prob_of(c)) != c");
      const auto sig = valency_signature(c);
      o.require(sig.v0star == flip(sig.v1star), "flip symmetry fails");
      Rational sum = 0;
      for (const auto& v : sig.val) sum += v;
      o.require(sum == make_rational(n * (n - 1), 2), "valency sum");
    }
  }
  auto orbit_identity = [&](const ChoiceFunction& c) {
    const int n = c.size();
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        if (x == y) continue;
        const auto s = pair_statistic(c, x, y);
        const std::vector<Vertex> fixed{x, y};
        o.require(orbit_average_enumerated(c, fixed) == biased_matrix(n, x, y, Rational(s.side), s.s0, s.s1),
                  "orbit-average identity fails for " + describe(c));
      }
    }
  };
  for (std::uint64_t code = 0; code < full_count(4); ++code) orbit_identity(ChoiceFunction::from_full_code(4, code));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) orbit_identity(ChoiceFunction::from_full_code(5, rng() % full_count(5)));

  const auto r5 = rotational(5);
  for (const std::vector<Vertex>& cyc : {std::vector<Vertex>{0, 1, 2}, {0, 1, 2, 3}, {0, 1, 2, 3, 4}}) {
    const auto t = cycle_profile(r5, cyc).induced_matrix();
    const int len = static_cast<int>(cyc.size());
    const Rational edge = half() + Rational(1) / Rational(2 * (len - 2));
    for (int i = 0; i < len; ++i) o.require(t.at(cyc[i], cyc[(i + 1) % len]) == edge, "cycle edge value");
  }
  if (o.pass) o.detail = "maj/prob_of, flip, valency sums at n<=4; orbit identity at n=4 and 10 at n=5; cycle values";
  return o;
}

Outcome taxonomy() {
  Outcome o;
  std::string counts;
  for (int n = 3; n <= 5; ++n) {
    const auto report = enumerate_check(n, EnumerationMode::ClassifyBalance);
    o.require(report.disagreements.empty(),
              report.disagreements.empty() ? "" : "counterexample: " + report.disagreements.front().detail);
    const auto& b = *report.balance;
    o.require(b.all_weight == b.all_pseudo, "weight != pseudo counts");
    o.require(b.full_partition == b.full_partition_plus, "partition != partition+ on full");
    counts += " n=" + std::to_string(n) + ":" + std::to_string(b.all_weight) + "/" + std::to_string(b.all_total);
  }
  if (o.pass) o.detail = "zero counterexamples; weight-balanced counts" + counts;
  return o;
}

Outcome certificates() {
  Outcome o;
  int found = 0, refuted = 0;
  for (int n = 3; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < full_count(n); ++code) {
      const auto d = ChoiceFunction::from_full_code(n, code);
      const auto cert = f_certificate(d);
      o.require(cert.has_value() == has_clause_g(d), "certificate existence differs from clause (g)");
      if (cert) {
        ++found;
        o.require(check_certificate(d, *cert), "certificate fails re-verification");
      } else {
        const auto systems = certificate_systems(d);
        for (const auto* sys : {&systems.above, &systems.below}) {
          const auto out = solve(*sys);
          o.require(out.status == LpStatus::Infeasible, "certificate system unexpectedly feasible");
          o.require(out.farkas.has_value() && check_farkas(*sys, *out.farkas), "missing or invalid Farkas witness");
        }
        ++refuted;
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(found) + " certificates verified, " + std::to_string(refuted) +
               " balanced generators refuted with Farkas witnesses";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no runtime bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "theorem validation n=3", 5, theorem_n3},
      {2, "theorem validation n=4", 300, theorem_n4},
      {3, "balanced case n=5", 600, balanced_n5},
      {4, "classic McGarvey baseline", 0, mcgarvey_baseline},
      {5, "Condorcet regression", 0, condorcet},
      {6, "identity suites", 0, identities},
      {7, "balance taxonomy n<=5", 0, taxonomy},
      {8, "certificate soundness", 0, certificates},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail = "runtime limit exceeded; " + o.detail;
    }
    failures += !o.pass;
    std::printf("criterion %d (%s): %s [%.2fs] %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
