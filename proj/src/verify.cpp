#include "majcl/verify.hpp"

#include "majcl/error.hpp"

namespace majcl {

namespace {

struct Mass {
  const ChoiceFunction* voter;
  Rational weight;
};

std::vector<Mass> masses(const IntegerProfile& p) {
  std::vector<Mass> out;
  for (const auto& v : p.voters()) out.push_back({&v.voter, Rational(v.multiplicity)});
  return out;
}

std::vector<Mass> masses(const WeightedProfile& p) {
  std::vector<Mass> out;
  for (const auto& v : p.voters()) out.push_back({&v.voter, v.weight});
  return out;
}

std::vector<PairTally> tally(int n, const std::vector<Mass>& voters) {
  std::vector<PairTally> out;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      Rational mass_x = 0;
      Rational mass_y = 0;
      for (const auto& [voter, weight] : voters) {
        const auto w = voter->winner(x, y);
        if (!w) {
          mass_x += weight / 2;
          mass_y += weight / 2;
        } else if (*w == x) {
          mass_x += weight;
        } else {
          mass_y += weight;
        }
      }
      PairTally t;
      t.x = x;
      t.y = y;
      if (mass_x == mass_y) {
        t.outcome = PairOutcome::Tie;
      } else {
        t.outcome = PairOutcome::Win;
        t.winner = mass_x > mass_y ? x : y;
      }
      const bool x_leads = mass_x > mass_y;
      t.winner_count = x_leads ? mass_x : mass_y;
      t.loser_count = x_leads ? mass_y : mass_x;
      out.push_back(std::move(t));
    }
  }
  return out;
}

ChoiceFunction from_tally(int n, const std::vector<PairTally>& tallies) {
  std::vector<Vertex> winners(pair_count(n), -1);
  for (const auto& t : tallies) {
    if (t.winner) winners[pair_index(n, t.x, t.y)] = *t.winner;
  }
  return ChoiceFunction(n, std::move(winners));
}

VerificationReport compare(int n, std::vector<PairTally> tallies, const ChoiceFunction& target) {
  if (target.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "profile has n=" + std::to_string(n) + ", target has n=" +
                                                  std::to_string(target.size()));
  }
  VerificationReport report;
  for (auto& t : tallies) {
    t.expected = target.winner(t.x, t.y);
    if (t.expected != t.winner) report.mismatches.push_back({t.x, t.y});
  }
  report.per_pair = std::move(tallies);
  report.pass = report.mismatches.empty();
  return report;
}

}  // namespace

ChoiceFunction majority_of_profile(const IntegerProfile& p) { return from_tally(p.size(), tally(p.size(), masses(p))); }

ChoiceFunction majority_of_profile(const WeightedProfile& p) {
  return from_tally(p.size(), tally(p.size(), masses(p)));
}

VerificationReport verify(const IntegerProfile& p, const ChoiceFunction& target) {
  return compare(p.size(), tally(p.size(), masses(p)), target);
}

VerificationReport verify(const WeightedProfile& p, const ChoiceFunction& target) {
  return compare(p.size(), tally(p.size(), masses(p)), target);
}

}  // namespace majcl
