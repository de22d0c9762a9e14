#pragma once

#include <span>
#include <vector>

#include "majcl/choice_function.hpp"
#include "majcl/prob_matrix.hpp"
#include "majcl/rational.hpp"

namespace majcl {

class Permutation;

struct WeightedVoter {
  ChoiceFunction voter;
  Rational weight;

  friend bool operator==(const WeightedVoter&, const WeightedVoter&) = default;
};

/// A distribution over voters. Duplicate voters are merged on construction
/// and the voters are kept sorted by code; weights are positive and sum to 1.
class WeightedProfile {
 public:
  WeightedProfile(int n, std::vector<WeightedVoter> voters);

  int size() const noexcept { return n_; }
  const std::vector<WeightedVoter>& voters() const noexcept { return voters_; }

  /// Σ weight · prob_of(voter).
  ProbMatrix induced_matrix() const;

  friend bool operator==(const WeightedProfile&, const WeightedProfile&) = default;

 private:
  int n_;
  std::vector<WeightedVoter> voters_;
};

/// Convex mixture Σ weight_i · profile_i (weights positive, summing to 1).
WeightedProfile mix(std::span<const std::pair<Rational, WeightedProfile>> parts);
/// Uniform mixture of the given profiles.
WeightedProfile mix_uniform(std::span<const WeightedProfile> parts);
WeightedProfile apply_permutation(const WeightedProfile& p, const Permutation& pi);

struct CountedVoter {
  ChoiceFunction voter;
  Integer multiplicity;

  friend bool operator==(const CountedVoter&, const CountedVoter&) = default;
};

/// A finite multiset of voters, merged and sorted by code.
class IntegerProfile {
 public:
  IntegerProfile(int n, std::vector<CountedVoter> voters);

  int size() const noexcept { return n_; }
  const std::vector<CountedVoter>& voters() const noexcept { return voters_; }
  /// |J|, the number of voters counted with multiplicity.
  Integer total() const;

  friend bool operator==(const IntegerProfile&, const IntegerProfile&) = default;

 private:
  int n_;
  std::vector<CountedVoter> voters_;
};

}  // namespace majcl
