#include "majcl/realizability.hpp"

#include "majcl/balance.hpp"
#include "majcl/error.hpp"
#include "majcl/permutation.hpp"

namespace majcl {

namespace {

void require_full(const ChoiceFunction& d) {
  if (!d.is_full()) throw Error(ErrorKind::NotFull, "generator must be a full choice function");
}

Point certificate_target(int n) {
  const Rational coordinate = make_rational(n - 2, 2);
  return {coordinate, coordinate};
}

struct Candidate {
  int side;
  Point point;
  VertexPair witness;  // least witness of the point
};

// Points of V*0 followed by V*1, each set in point order.
std::vector<Candidate> candidates(const ValencySignature& sig) {
  std::vector<Candidate> out;
  for (const auto& [point, witnesses] : sig.v0star) out.push_back({0, point, witnesses.front()});
  for (const auto& [point, witnesses] : sig.v1star) out.push_back({1, point, witnesses.front()});
  return out;
}

FCertificate build(int n, const std::vector<Candidate>& cands, const std::vector<Rational>& weights) {
  FCertificate cert;
  cert.n = n;
  cert.r0 = 0;
  cert.r1 = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (sgn(weights[i]) == 0) continue;
    SupportEntry entry{cands[i].point, cands[i].witness, weights[i]};
    if (cands[i].side == 1) {
      cert.r1 += weights[i];
      cert.support1.push_back(std::move(entry));
    } else {
      cert.r0 += weights[i];
      cert.support0.push_back(std::move(entry));
    }
  }
  return cert;
}

FCertificate verified(const ChoiceFunction& d, FCertificate cert) {
  if (!check_certificate(d, cert)) {
    throw Error(ErrorKind::InternalCheckFailed, "constructed certificate fails re-verification");
  }
  return cert;
}

}  // namespace

bool check_certificate(const ChoiceFunction& d, const FCertificate& cert) {
  if (!d.is_full() || cert.n != d.size()) return false;
  const auto val = valencies(d);
  const auto value = [&](Vertex v) -> const Rational& { return val[static_cast<std::size_t>(v)]; };
  Rational r0 = 0;
  Rational r1 = 0;
  Rational sx = 0;
  Rational sy = 0;
  for (int side = 0; side < 2; ++side) {
    const auto& support = side == 1 ? cert.support1 : cert.support0;
    for (const auto& [point, witness, weight] : support) {
      const auto [u, v] = witness;
      if (u < 0 || v < 0 || u >= d.size() || v >= d.size() || u == v) return false;
      if (sgn(weight) <= 0) return false;
      if (side == 1) {
        if (!d.has_edge(u, v) || point != Point{value(u) - 1, value(v)}) return false;
        r1 += weight;
      } else {
        if (!d.has_edge(v, u) || point != Point{value(u), value(v) - 1}) return false;
        r0 += weight;
      }
      sx += weight * point.first;
      sy += weight * point.second;
    }
  }
  return r0 == cert.r0 && r1 == cert.r1 && r0 + r1 == 1 && r0 != half() &&
         Point{sx, sy} == certificate_target(d.size());
}

bool has_clause_g(const ChoiceFunction& d) {
  require_full(d);
  return !is_balanced(d);
}

CertificateSystems certificate_systems(const ChoiceFunction& d) {
  require_full(d);
  const auto cands = candidates(valency_signature(d));
  const Point target = certificate_target(d.size());
  const int vars = static_cast<int>(cands.size());
  auto make = [&](int positive_side) {
    LinearProgram lp(vars);
    std::vector<Rational> xs, ys, mass;
    for (const auto& cand : cands) {
      xs.push_back(cand.point.first - target.first);
      ys.push_back(cand.point.second - target.second);
      mass.emplace_back(cand.side == positive_side ? 1 : -1);
    }
    lp.add(std::move(xs), Relation::Equal, 0);
    lp.add(std::move(ys), Relation::Equal, 0);
    lp.add(std::move(mass), Relation::Equal, 1);
    return lp;
  };
  return {make(1), make(0)};
}

std::optional<FCertificate> f_certificate(const ChoiceFunction& d) {
  require_full(d);
  const int n = d.size();
  const auto sig = valency_signature(d);
  const Point target = certificate_target(n);

  // The target itself in V*1: a one-point certificate with r1 = 1.
  if (const auto it = sig.v1star.find(target); it != sig.v1star.end()) {
    FCertificate cert;
    cert.n = n;
    cert.r0 = 0;
    cert.r1 = 1;
    cert.support1.push_back({target, it->second.front(), Rational(1)});
    return verified(d, std::move(cert));
  }

  const auto cands = candidates(sig);
  LinearProgram lp(static_cast<int>(cands.size()));
  std::vector<Rational> ones, xs, ys;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    ones.emplace_back(1);
    xs.push_back(cands[i].point.first);
    ys.push_back(cands[i].point.second);
    lp.objective[i] = cands[i].side == 1 ? 1 : 0;
  }
  lp.add(std::move(ones), Relation::Equal, 1);
  lp.add(std::move(xs), Relation::Equal, target.first);
  lp.add(std::move(ys), Relation::Equal, target.second);

  for (Sense sense : {Sense::Maximize, Sense::Minimize}) {
    lp.sense = sense;
    const LpOutcome outcome = solve(lp);
    if (outcome.status != LpStatus::Optimal) return std::nullopt;
    const bool found = sense == Sense::Maximize ? outcome.value > half() : outcome.value < half();
    if (found) return verified(d, build(n, cands, outcome.point));
  }
  return std::nullopt;
}

std::optional<CertificateRefutation> refute_certificate(const ChoiceFunction& d) {
  const CertificateSystems systems = certificate_systems(d);
  const LpOutcome above = solve(systems.above);
  const LpOutcome below = solve(systems.below);
  if (above.status != LpStatus::Infeasible || below.status != LpStatus::Infeasible) return std::nullopt;
  if (!above.farkas || !below.farkas || !check_farkas(systems.above, *above.farkas) ||
      !check_farkas(systems.below, *below.farkas)) {
    throw Error(ErrorKind::InternalCheckFailed, "missing or invalid Farkas witness");
  }
  return CertificateRefutation{*above.farkas, *below.farkas};
}

const char* to_string(MembershipReason reason) {
  switch (reason) {
    case MembershipReason::ClauseG: return "clause(g)";
    case MembershipReason::PseudoBalanced: return "pseudo-balanced";
    case MembershipReason::NotPseudoBalanced: return "not-pseudo-balanced";
  }
  return "unknown";
}

MembershipAnswer decide_membership(const ChoiceFunction& d, const ChoiceFunction& c) {
  return decide_membership(std::span<const ChoiceFunction>(&d, 1), c);
}

MembershipAnswer decide_membership(std::span<const ChoiceFunction> generators, const ChoiceFunction& c) {
  if (generators.empty()) throw Error(ErrorKind::InvalidProfile, "family needs at least one generator");
  for (const auto& d : generators) {
    require_full(d);
    if (d.size() != c.size()) {
      throw Error(ErrorKind::DimensionMismatch, "generator has n=" + std::to_string(d.size()) +
                                                    ", target has n=" + std::to_string(c.size()));
    }
  }
  MembershipAnswer answer;
  for (const auto& d : generators) {
    if (has_clause_g(d)) {
      answer.member = true;
      answer.reason = MembershipReason::ClauseG;
      answer.certificate = f_certificate(d);
      if (!answer.certificate) {
        throw Error(ErrorKind::InternalCheckFailed, "unbalanced generator without a certificate");
      }
      return answer;
    }
  }
  const SccDecomposition scc = strong_components(c);
  if (scc.inter_edges.empty()) {
    answer.member = true;
    answer.reason = MembershipReason::PseudoBalanced;
    return answer;
  }
  answer.member = false;
  answer.reason = MembershipReason::NotPseudoBalanced;
  answer.uncovered_edge = scc.inter_edges.front();
  answer.farkas = refute_certificate(generators.front());
  return answer;
}

LinearProgram oracle_program(std::span<const ChoiceFunction> orbit, const ChoiceFunction& c) {
  const int n = c.size();
  const int voters = static_cast<int>(orbit.size());
  const int margin = voters;
  LinearProgram lp(voters + 1);
  lp.upper_bounds[static_cast<std::size_t>(margin)] = Rational(1);
  std::vector<ProbMatrix> matrices;
  matrices.reserve(orbit.size());
  for (const auto& e : orbit) {
    if (e.size() != n) throw Error(ErrorKind::DimensionMismatch, "orbit member size differs from target");
    matrices.push_back(prob_of(e));
  }

  std::vector<Rational> ones(static_cast<std::size_t>(voters + 1), Rational(1));
  ones.back() = 0;
  lp.add(std::move(ones), Relation::Equal, 1);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const auto w = c.winner(x, y);
      // mass of the c-winner (or of y for an undecided pair)
      const Vertex a = w && *w == x ? y : x;
      const Vertex b = w ? *w : y;
      std::vector<Rational> row(static_cast<std::size_t>(voters + 1), Rational(0));
      for (std::size_t i = 0; i < matrices.size(); ++i) row[i] = matrices[i].at(a, b);
      if (w) {
        row.back() = -1;
        lp.add(std::move(row), Relation::GreaterEqual, half());
      } else {
        lp.add(std::move(row), Relation::Equal, half());
      }
    }
  }
  return lp;
}

bool oracle_membership(const ChoiceFunction& d, const ChoiceFunction& c, const Limits& limits) {
  require_full(d);
  if (d.size() != c.size()) throw Error(ErrorKind::DimensionMismatch, "generator and target sizes differ");
  const auto orbit = sym_closure(d, limits);
  return max_margin_feasible(oracle_program(orbit, c)).feasible;
}

}  // namespace majcl
