#pragma once

#include <optional>
#include <span>
#include <vector>

#include "majcl/choice_function.hpp"
#include "majcl/limits.hpp"
#include "majcl/lp.hpp"
#include "majcl/rational.hpp"
#include "majcl/valency.hpp"

namespace majcl {

struct SupportEntry {
  Point point;
  VertexPair witness;  // (u, v) in d producing `point`
  Rational weight;

  friend bool operator==(const SupportEntry&, const SupportEntry&) = default;
};

/// Expresses (n/2 - 1, n/2 - 1) as a combination of points of V*0 and V*1
/// with side masses r0 + r1 = 1, r0 != ½.
struct FCertificate {
  int n = 0;
  Rational r0;
  Rational r1;
  std::vector<SupportEntry> support0;
  std::vector<SupportEntry> support1;

  friend bool operator==(const FCertificate&, const FCertificate&) = default;
};

/// Re-checks every certificate invariant against the generator d.
bool check_certificate(const ChoiceFunction& d, const FCertificate& cert);

/// Homogeneous forms of the certificate question, over one nonnegative weight
/// per point of V*0 then V*1: Σ w·(p - target) = 0 and Σ ±w = 1, where the
/// sign is + on V*1 for `above` (r1 > ½) and + on V*0 for `below` (r1 < ½).
struct CertificateSystems {
  LinearProgram above;
  LinearProgram below;
};

CertificateSystems certificate_systems(const ChoiceFunction& d);

/// Farkas witnesses showing both homogeneous systems are infeasible.
struct CertificateRefutation {
  std::vector<Rational> above;
  std::vector<Rational> below;
};

bool has_clause_g(const ChoiceFunction& d);

std::optional<FCertificate> f_certificate(const ChoiceFunction& d);

/// Present exactly when no certificate exists; witnesses are verified.
std::optional<CertificateRefutation> refute_certificate(const ChoiceFunction& d);

enum class MembershipReason { ClauseG, PseudoBalanced, NotPseudoBalanced };

const char* to_string(MembershipReason reason);

struct MembershipAnswer {
  bool member = false;
  MembershipReason reason = MembershipReason::NotPseudoBalanced;
  std::optional<FCertificate> certificate;
  std::optional<CertificateRefutation> farkas;
  std::optional<Edge> uncovered_edge;  // a Tor(c) edge on no directed cycle
};

/// Is c in the majority closure of the relabelings of the full generator d?
MembershipAnswer decide_membership(const ChoiceFunction& d, const ChoiceFunction& c);

/// Same question for the relabelings of several full generators.
MembershipAnswer decide_membership(std::span<const ChoiceFunction> generators, const ChoiceFunction& c);

/// The brute-force program over sym_closure(d): weights r_e plus margin ε.
LinearProgram oracle_program(std::span<const ChoiceFunction> orbit, const ChoiceFunction& c);

/// Ground truth by exact LP over the whole orbit of d.
bool oracle_membership(const ChoiceFunction& d, const ChoiceFunction& c, const Limits& limits = {});

}  // namespace majcl
