#pragma once

#include <optional>
#include <vector>

#include "majcl/choice_function.hpp"
#include "majcl/profile.hpp"
#include "majcl/rational.hpp"

namespace majcl {

enum class PairOutcome { Win, Tie };

struct PairTally {
  Vertex x = 0;  // x < y
  Vertex y = 0;
  Rational winner_count;  // mass of the majority side (either side on a tie)
  Rational loser_count;
  PairOutcome outcome = PairOutcome::Tie;
  std::optional<Vertex> winner;    // observed majority winner
  std::optional<Vertex> expected;  // target winner
};

struct VerificationReport {
  bool pass = false;
  std::vector<PairTally> per_pair;
  std::vector<VertexPair> mismatches;
};

/// Strict pointwise majority; abstaining voters count ½ toward each side and
/// an exact tie leaves the pair Undefined.
ChoiceFunction majority_of_profile(const IntegerProfile& p);
ChoiceFunction majority_of_profile(const WeightedProfile& p);

VerificationReport verify(const IntegerProfile& p, const ChoiceFunction& target);
VerificationReport verify(const WeightedProfile& p, const ChoiceFunction& target);

}  // namespace majcl
