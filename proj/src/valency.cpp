#include "majcl/valency.hpp"

#include <algorithm>
#include <set>

#include "majcl/error.hpp"
#include "majcl/permutation.hpp"

namespace majcl {

Rational valency(const ChoiceFunction& c, Vertex x) {
  if (x < 0 || x >= c.size()) throw Error(ErrorKind::IndexOutOfRange, "valency of missing vertex");
  long wins_elsewhere = 0;
  long undecided = 0;
  for (Vertex y = 0; y < c.size(); ++y) {
    if (y == x) continue;
    const auto w = c.winner(x, y);
    if (!w) {
      ++undecided;
    } else if (*w == y) {
      ++wins_elsewhere;
    }
  }
  return Rational(wins_elsewhere) + make_rational(undecided, 2);
}

std::vector<Rational> valencies(const ChoiceFunction& c) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(c.size()));
  for (Vertex x = 0; x < c.size(); ++x) out.push_back(valency(c, x));
  return out;
}

ValencySignature valency_signature(const ChoiceFunction& c) {
  ValencySignature sig;
  sig.n = c.size();
  sig.val = valencies(c);
  for (Vertex x0 = 0; x0 < c.size(); ++x0) {
    for (Vertex x1 = 0; x1 < c.size(); ++x1) {
      if (x0 == x1) continue;
      const Rational& k0 = sig.val[static_cast<std::size_t>(x0)];
      const Rational& k1 = sig.val[static_cast<std::size_t>(x1)];
      const auto w = c.winner(x0, x1);
      const VertexPair witness{x0, x1};
      if (!w) {
        sig.vhalf[{k0, k1}].push_back(witness);
      } else if (*w == x0) {
        sig.v0[{k0, k1}].push_back(witness);
        sig.v0star[{k0, k1 - 1}].push_back(witness);
      } else {
        sig.v1[{k0, k1}].push_back(witness);
        sig.v1star[{k0 - 1, k1}].push_back(witness);
      }
    }
  }
  return sig;
}

PointSet flip(const PointSet& points) {
  PointSet out;
  for (const auto& [point, witnesses] : points) {
    auto& slot = out[{point.second, point.first}];
    for (const auto& [a, b] : witnesses) slot.push_back({b, a});
  }
  for (auto& [point, witnesses] : out) std::sort(witnesses.begin(), witnesses.end());
  return out;
}

PairStatistic pair_statistic(const ChoiceFunction& c, Vertex x, Vertex y) {
  if (!c.is_full()) throw Error(ErrorKind::NotFull, "pair statistics need a full choice function");
  if (x == y) throw Error(ErrorKind::SamePair, "pair statistics need x != y");
  const int n = c.size();
  long from_x = 0;
  long from_y = 0;
  for (Vertex z = 0; z < n; ++z) {
    if (z == x || z == y) continue;
    from_x += c.has_edge(x, z);
    from_y += c.has_edge(y, z);
  }
  PairStatistic stat;
  stat.side = c.has_edge(x, y) ? 1 : 0;
  stat.s0 = make_rational(from_x, n - 2);
  stat.s1 = make_rational(from_y, n - 2);
  return stat;
}

ProbMatrix biased_matrix(int n, Vertex x, Vertex y, const Rational& a, const Rational& s0,
                         const Rational& s1) {
  if (x == y) throw Error(ErrorKind::SamePair, "biased matrix needs x != y");
  if (x < 0 || y < 0 || x >= n || y >= n) throw Error(ErrorKind::IndexOutOfRange, "biased matrix pair");
  for (const Rational* v : {&a, &s0, &s1}) {
    if (*v < 0 || *v > 1) throw Error(ErrorKind::OutOfUnitInterval, to_string(*v) + " outside [0,1]");
  }
  ProbMatrix t(n);
  t.set(x, y, a);
  for (Vertex z = 0; z < n; ++z) {
    if (z == x || z == y) continue;
    t.set(x, z, s0);
    t.set(y, z, s1);
  }
  return t;
}

namespace {

void check_fixed(int n, std::span<const Vertex> fixed) {
  std::set<Vertex> seen;
  for (Vertex v : fixed) {
    if (v < 0 || v >= n) throw Error(ErrorKind::IndexOutOfRange, "fixed vertex out of range");
    if (!seen.insert(v).second) throw Error(ErrorKind::RepeatedVertex, "fixed vertex repeated");
  }
}

}  // namespace

ProbMatrix orbit_average_enumerated(const ChoiceFunction& c, std::span<const Vertex> fixed,
                                    const Limits& limits) {
  const int n = c.size();
  check_fixed(n, fixed);
  if (n > limits.orbit_cap) {
    throw Error(ErrorKind::OrbitTooLarge, "n=" + std::to_string(n) + " exceeds orbit cap");
  }
  const auto stabilizer = pointwise_stabilizer(n, fixed);
  const Rational share(1, static_cast<unsigned long>(stabilizer.size()));
  std::vector<WeightedMatrix> parts;
  parts.reserve(stabilizer.size());
  for (const Permutation& pi : stabilizer) parts.emplace_back(share, prob_of(apply_permutation(c, pi)));
  return convex_combine(parts);
}

ProbMatrix orbit_average(const ChoiceFunction& c, std::span<const Vertex> fixed, const Limits& limits) {
  if (fixed.size() == 2 && c.is_full()) {
    check_fixed(c.size(), fixed);
    const Vertex x = fixed[0];
    const Vertex y = fixed[1];
    const PairStatistic s = pair_statistic(c, x, y);
    return biased_matrix(c.size(), x, y, Rational(s.side), s.s0, s.s1);
  }
  return orbit_average_enumerated(c, fixed, limits);
}

}  // namespace majcl
