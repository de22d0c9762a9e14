#include "majcl/synthesis.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "majcl/balance.hpp"
#include "majcl/error.hpp"
#include "majcl/permutation.hpp"
#include "majcl/valency.hpp"
#include "majcl/verify.hpp"

namespace majcl {

namespace {

void require_full(const ChoiceFunction& d) {
  if (!d.is_full()) throw Error(ErrorKind::NotFull, "generator must be a full choice function");
}

void require_orbit_scope(int n, const Limits& limits) {
  if (n > limits.orbit_cap) {
    throw Error(ErrorKind::OrbitTooLarge, "n=" + std::to_string(n) + " exceeds orbit cap " +
                                              std::to_string(limits.orbit_cap));
  }
}

void require_distinct(int n, std::span<const Vertex> vertices) {
  std::set<Vertex> seen;
  for (Vertex v : vertices) {
    if (v < 0 || v >= n) throw Error(ErrorKind::IndexOutOfRange, "vertex out of range");
    if (!seen.insert(v).second) throw Error(ErrorKind::RepeatedVertex, "vertex " + std::to_string(v) + " repeated");
  }
}

// Voters π∘σ·d over π in the pointwise stabilizer of `anchor`, where σ maps
// `source` onto `anchor`; each voter gets weight/|stabilizer|.
void add_stabilizer_block(const ChoiceFunction& d, std::span<const Vertex> source,
                          std::span<const Vertex> anchor, const Rational& weight,
                          std::vector<WeightedVoter>& out) {
  const int n = d.size();
  const auto sigma = least_mapping(n, source, anchor);
  if (!sigma) throw Error(ErrorKind::InternalCheckFailed, "inconsistent witness mapping");
  const auto stabilizer = pointwise_stabilizer(n, anchor);
  const Rational share = weight / static_cast<unsigned long>(stabilizer.size());
  for (const Permutation& pi : stabilizer) out.push_back({apply_permutation(d, compose(pi, *sigma)), share});
}

ProbMatrix triangle_matrix(int n, Vertex x, Vertex y, Vertex z) {
  ProbMatrix t(n);
  t.set(x, y, 1);
  t.set(y, z, 1);
  t.set(z, x, 1);
  return t;
}

std::optional<std::array<Vertex, 3>> least_directed_triangle(const ChoiceFunction& d) {
  const int n = d.size();
  for (Vertex u0 = 0; u0 < n; ++u0) {
    for (Vertex u1 = 0; u1 < n; ++u1) {
      if (u1 == u0 || !d.has_edge(u0, u1)) continue;
      for (Vertex u2 = 0; u2 < n; ++u2) {
        if (u2 == u0 || u2 == u1) continue;
        if (d.has_edge(u1, u2) && d.has_edge(u2, u0)) return std::array<Vertex, 3>{u0, u1, u2};
      }
    }
  }
  return std::nullopt;
}

std::vector<Vertex> canonical_rotation(std::vector<Vertex> cycle) {
  const auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  return cycle;
}

void check_realizes(const IntegerProfile& profile, const ChoiceFunction& c) {
  if (!verify(profile, c).pass) {
    throw Error(ErrorKind::InternalCheckFailed, "synthesized profile does not realize " + describe(c));
  }
}

SynthesisStage stage(std::string label, WeightedProfile profile) {
  ProbMatrix induced = profile.induced_matrix();
  return {std::move(label), std::move(profile), std::move(induced)};
}

WeightedProfile balanced_mixture(const ChoiceFunction& d, const ChoiceFunction& c, const Limits& limits,
                                 std::vector<SynthesisStage>* stages) {
  std::vector<std::vector<Vertex>> cycles;
  std::set<std::vector<Vertex>> seen;
  for (const Edge& e : c.edges()) {
    auto cycle = shortest_cycle_through(c, e);
    if (!cycle) throw Error(ErrorKind::NotPseudoBalanced, "edge on no directed cycle");
    auto canonical = canonical_rotation(std::move(*cycle));
    if (seen.insert(canonical).second) cycles.push_back(std::move(canonical));
  }
  std::vector<WeightedProfile> parts;
  for (const auto& cycle : cycles) {
    parts.push_back(cycle_profile(d, cycle, limits));
    if (stages) {
      std::string label = "cycle";
      for (Vertex v : cycle) label += " " + std::to_string(v);
      stages->push_back(stage(std::move(label), parts.back()));
    }
  }
  return mix_uniform(parts);
}

}  // namespace

WeightedProfile pair_bias_profile(const ChoiceFunction& d, Vertex x, Vertex y, const Limits& limits) {
  require_full(d);
  const auto cert = f_certificate(d);
  if (!cert) throw Error(ErrorKind::BalancedFamily, "generator is balanced; no single-pair bias exists");
  return pair_bias_profile(d, *cert, x, y, limits);
}

WeightedProfile pair_bias_profile(const ChoiceFunction& d, const FCertificate& cert, Vertex x, Vertex y,
                                  const Limits& limits) {
  require_full(d);
  const int n = d.size();
  if (x == y) throw Error(ErrorKind::SamePair, "pair bias needs x != y");
  if (x < 0 || y < 0 || x >= n || y >= n) throw Error(ErrorKind::IndexOutOfRange, "pair bias vertex");
  require_orbit_scope(n, limits);

  const bool forward = cert.r1 > half();
  const std::array<Vertex, 2> anchor = forward ? std::array<Vertex, 2>{x, y} : std::array<Vertex, 2>{y, x};
  std::vector<WeightedVoter> voters;
  for (const auto* support : {&cert.support1, &cert.support0}) {
    for (const auto& entry : *support) {
      const std::array<Vertex, 2> source{entry.witness.first, entry.witness.second};
      add_stabilizer_block(d, source, anchor, entry.weight, voters);
    }
  }
  WeightedProfile profile(n, std::move(voters));

  const Rational a = forward ? cert.r1 : cert.r0;
  if (profile.induced_matrix() != biased_matrix(n, x, y, a, half(), half())) {
    throw Error(ErrorKind::InternalCheckFailed, "pair-bias profile has the wrong induced matrix");
  }
  return profile;
}

WeightedProfile triangle_profile(const ChoiceFunction& d, Vertex x, Vertex y, Vertex z, const Limits& limits) {
  require_full(d);
  const int n = d.size();
  const std::array<Vertex, 3> anchor{x, y, z};
  require_distinct(n, anchor);
  if (!is_balanced(d)) throw Error(ErrorKind::NotBalanced, "triangle profiles need a balanced generator");
  require_orbit_scope(n, limits);
  const auto triangle = least_directed_triangle(d);
  if (!triangle) throw Error(ErrorKind::BalancedTriangleMissing, "no directed 3-cycle in " + describe(d));

  std::vector<WeightedVoter> voters;
  add_stabilizer_block(d, *triangle, anchor, Rational(1), voters);
  WeightedProfile profile(n, std::move(voters));
  if (profile.induced_matrix() != triangle_matrix(n, x, y, z)) {
    throw Error(ErrorKind::InternalCheckFailed, "triangle profile has the wrong induced matrix");
  }
  return profile;
}

WeightedProfile cycle_profile(const ChoiceFunction& d, std::span<const Vertex> cycle, const Limits& limits) {
  const int n = d.size();
  if (cycle.size() < 3) throw Error(ErrorKind::TooShort, "a cycle needs at least 3 vertices");
  require_distinct(n, cycle);
  std::vector<WeightedProfile> fan;
  for (std::size_t i = 1; i + 1 < cycle.size(); ++i) {
    fan.push_back(triangle_profile(d, cycle[0], cycle[i], cycle[i + 1], limits));
  }
  WeightedProfile profile = mix_uniform(fan);

  const auto len = static_cast<long>(cycle.size());
  ProbMatrix expected(n);
  const Rational edge_value = half() + make_rational(1, 2 * (len - 2));
  for (std::size_t i = 0; i < cycle.size(); ++i) expected.set(cycle[i], cycle[(i + 1) % cycle.size()], edge_value);
  if (profile.induced_matrix() != expected) {
    throw Error(ErrorKind::InternalCheckFailed, "cycle profile has the wrong induced matrix");
  }
  return profile;
}

IntegerProfile tie_profile(const ChoiceFunction& d, const Limits& limits) {
  require_full(d);
  require_orbit_scope(d.size(), limits);
  std::vector<CountedVoter> voters;
  for (const Permutation& pi : all_permutations(d.size())) voters.push_back({apply_permutation(d, pi), 1});
  return IntegerProfile(d.size(), std::move(voters));
}

IntegerProfile rationalize(const WeightedProfile& w) {
  Integer scale = 1;
  for (const auto& v : w.voters()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.weight.get_den_mpz_t());
  std::vector<CountedVoter> voters;
  voters.reserve(w.voters().size());
  for (const auto& v : w.voters()) {
    const Rational scaled = v.weight * scale;
    voters.push_back({v.voter, scaled.get_num()});
  }
  return IntegerProfile(w.size(), std::move(voters));
}

SynthesisTrace realize_target_traced(const ChoiceFunction& d, const ChoiceFunction& c, const Limits& limits) {
  require_full(d);
  if (d.size() != c.size()) throw Error(ErrorKind::DimensionMismatch, "generator and target sizes differ");
  const MembershipAnswer answer = decide_membership(d, c);
  if (!answer.member) {
    throw Error(ErrorKind::NotRealizable, describe(c) + " is not in the majority closure of " + describe(d));
  }

  SynthesisTrace trace;
  if (c.decided_count() == 0) {
    trace.final = tie_profile(d, limits);
    const Rational total(trace.final->total());
    std::vector<WeightedVoter> voters;
    for (const auto& v : trace.final->voters()) voters.push_back({v.voter, Rational(v.multiplicity) / total});
    trace.stages.push_back(stage("ties", WeightedProfile(d.size(), std::move(voters))));
  } else if (answer.reason == MembershipReason::ClauseG) {
    std::vector<WeightedProfile> parts;
    for (const Edge& e : c.edges()) {
      parts.push_back(pair_bias_profile(d, *answer.certificate, e.from, e.to, limits));
      trace.stages.push_back(
          stage("pair-bias " + std::to_string(e.from) + " " + std::to_string(e.to), parts.back()));
    }
    WeightedProfile mixture = mix_uniform(parts);
    trace.stages.push_back(stage("mixture", mixture));
    trace.final = rationalize(mixture);
  } else {
    WeightedProfile mixture = balanced_mixture(d, c, limits, &trace.stages);
    trace.stages.push_back(stage("mixture", mixture));
    trace.final = rationalize(mixture);
  }
  check_realizes(*trace.final, c);
  return trace;
}

IntegerProfile realize_target(const ChoiceFunction& d, const ChoiceFunction& c, const Limits& limits) {
  return *realize_target_traced(d, c, limits).final;
}

IntegerProfile realize_balanced_target(const ChoiceFunction& d, const ChoiceFunction& c, const Limits& limits) {
  require_full(d);
  if (d.size() != c.size()) throw Error(ErrorKind::DimensionMismatch, "generator and target sizes differ");
  if (!is_balanced(d)) throw Error(ErrorKind::NotBalanced, "generator is not balanced");
  if (!is_pseudo_balanced(c)) throw Error(ErrorKind::NotPseudoBalanced, describe(c) + " is not pseudo-balanced");
  if (c.decided_count() == 0) return tie_profile(d, limits);
  IntegerProfile profile = rationalize(balanced_mixture(d, c, limits, nullptr));
  check_realizes(profile, c);
  return profile;
}

IntegerProfile mcgarvey_classic(int n, const ChoiceFunction& c) {
  if (c.size() != n) throw Error(ErrorKind::DimensionMismatch, "target size differs from n");
  std::vector<CountedVoter> voters;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const auto w = c.winner(x, y);
      if (!w) continue;
      const Vertex b = *w;
      const Vertex a = b == x ? y : x;
      std::vector<Vertex> rest;
      for (Vertex z = 0; z < n; ++z) {
        if (z != a && z != b) rest.push_back(z);
      }
      std::vector<Vertex> first{b, a};
      first.insert(first.end(), rest.begin(), rest.end());
      std::vector<Vertex> second(rest.rbegin(), rest.rend());
      second.push_back(b);
      second.push_back(a);
      voters.push_back({linear_order_from_ranking(first), 1});
      voters.push_back({linear_order_from_ranking(second), 1});
    }
  }
  if (voters.empty()) {
    // nothing decided: one order and its reverse tie every pair
    const ChoiceFunction forward = linear_order(n);
    voters.push_back({forward, 1});
    voters.push_back({dual(forward), 1});
  }
  IntegerProfile profile(n, std::move(voters));
  check_realizes(profile, c);
  return profile;
}

}  // namespace majcl
