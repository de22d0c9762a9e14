#include "majcl/profile.hpp"

#include <map>

#include "majcl/error.hpp"
#include "majcl/permutation.hpp"

namespace majcl {

WeightedProfile::WeightedProfile(int n, std::vector<WeightedVoter> voters) : n_(n) {
  std::map<ChoiceFunction, Rational, CodeLess> merged;
  Rational total = 0;
  for (auto& [voter, weight] : voters) {
    if (voter.size() != n) throw Error(ErrorKind::DimensionMismatch, "voter size differs from n");
    if (weight <= 0) throw Error(ErrorKind::InvalidProfile, "voter weight must be positive");
    total += weight;
    merged[std::move(voter)] += weight;
  }
  if (total != 1) {
    throw Error(ErrorKind::WeightsDoNotSumToOne, "profile weights sum to " + to_string(total));
  }
  voters_.reserve(merged.size());
  for (auto& [voter, weight] : merged) voters_.push_back({voter, weight});
}

ProbMatrix WeightedProfile::induced_matrix() const {
  std::vector<WeightedMatrix> parts;
  parts.reserve(voters_.size());
  for (const auto& [voter, weight] : voters_) parts.emplace_back(weight, prob_of(voter));
  return convex_combine(parts);
}

WeightedProfile mix(std::span<const std::pair<Rational, WeightedProfile>> parts) {
  if (parts.empty()) throw Error(ErrorKind::WeightsDoNotSumToOne, "empty mixture");
  const int n = parts.front().second.size();
  std::vector<WeightedVoter> voters;
  for (const auto& [weight, profile] : parts) {
    if (weight <= 0) throw Error(ErrorKind::InvalidProfile, "mixture weight must be positive");
    for (const auto& v : profile.voters()) voters.push_back({v.voter, weight * v.weight});
  }
  return WeightedProfile(n, std::move(voters));
}

WeightedProfile mix_uniform(std::span<const WeightedProfile> parts) {
  std::vector<std::pair<Rational, WeightedProfile>> weighted;
  weighted.reserve(parts.size());
  const Rational share(1, static_cast<unsigned long>(parts.size()));
  for (const auto& p : parts) weighted.emplace_back(share, p);
  return mix(weighted);
}

WeightedProfile apply_permutation(const WeightedProfile& p, const Permutation& pi) {
  std::vector<WeightedVoter> voters;
  voters.reserve(p.voters().size());
  for (const auto& v : p.voters()) voters.push_back({apply_permutation(v.voter, pi), v.weight});
  return WeightedProfile(p.size(), std::move(voters));
}

IntegerProfile::IntegerProfile(int n, std::vector<CountedVoter> voters) : n_(n) {
  std::map<ChoiceFunction, Integer, CodeLess> merged;
  for (auto& [voter, count] : voters) {
    if (voter.size() != n) throw Error(ErrorKind::DimensionMismatch, "voter size differs from n");
    if (count < 1) throw Error(ErrorKind::InvalidProfile, "multiplicity must be at least 1");
    merged[std::move(voter)] += count;
  }
  if (merged.empty()) throw Error(ErrorKind::InvalidProfile, "profile has no voters");
  voters_.reserve(merged.size());
  for (auto& [voter, count] : merged) voters_.push_back({voter, count});
}

Integer IntegerProfile::total() const {
  Integer sum = 0;
  for (const auto& v : voters_) sum += v.multiplicity;
  return sum;
}

}  // namespace majcl
