#pragma once

#include <span>
#include <utility>
#include <vector>

#include "majcl/choice_function.hpp"
#include "majcl/rational.hpp"

namespace majcl {

class Permutation;

/// Element of pr(C): pairwise weights t_{x,y} with t_{x,y} + t_{y,x} = 1.
///
/// Only the entries above the diagonal are stored; the complement is implied,
/// so the invariant cannot be broken.
class ProbMatrix {
 public:
  /// The all-½ matrix.
  explicit ProbMatrix(int n);

  int size() const noexcept { return n_; }

  Rational at(Vertex x, Vertex y) const;
  /// Sets t_{x,y} (and hence t_{y,x} = 1 - value). Value must lie in [0,1].
  void set(Vertex x, Vertex y, const Rational& value);

  friend bool operator==(const ProbMatrix&, const ProbMatrix&) = default;

 private:
  int n_;
  std::vector<Rational> upper_;
};

ProbMatrix prob_of(const ChoiceFunction& d);
ProbMatrix dual_matrix(const ProbMatrix& t);
ChoiceFunction maj(const ProbMatrix& t);
ProbMatrix apply_permutation(const ProbMatrix& t, const Permutation& pi);

using WeightedMatrix = std::pair<Rational, ProbMatrix>;

/// Entrywise convex combination; weights must be positive and sum to 1.
ProbMatrix convex_combine(std::span<const WeightedMatrix> parts);

}  // namespace majcl
