#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "majcl/choice_function.hpp"
#include "majcl/limits.hpp"
#include "majcl/prob_matrix.hpp"
#include "majcl/rational.hpp"

namespace majcl {

using Point = std::pair<Rational, Rational>;

/// Deduplicated 2-D points, each with every witness pair (x0, x1) that
/// produced it, witnesses in lexicographic order.
using PointSet = std::map<Point, std::vector<VertexPair>>;

/// val_d(x): pairs {x,y} that y wins, plus half the undecided pairs at x.
Rational valency(const ChoiceFunction& c, Vertex x);
std::vector<Rational> valencies(const ChoiceFunction& c);

struct ValencySignature {
  int n = 0;
  std::vector<Rational> val;
  PointSet v0;     // (val x0, val x1) over pairs won by x0
  PointSet v1;     // ... won by x1
  PointSet vhalf;  // ... over undecided pairs
  PointSet v0star;  // v0 shifted by (0,1)
  PointSet v1star;  // v1 shifted by (1,0)
};

ValencySignature valency_signature(const ChoiceFunction& c);

/// Swaps the coordinates of every point (witnesses are swapped as well).
PointSet flip(const PointSet& points);

struct PairStatistic {
  int side = 0;  // 1 iff c{x,y} = y
  Rational s0;   // share of outside z with c{x,z} = z
  Rational s1;   // share of outside z with c{y,z} = z

  friend bool operator==(const PairStatistic&, const PairStatistic&) = default;
};

/// Counts over z ∉ {x,y}, divided by n-2. Requires a full c and x != y.
PairStatistic pair_statistic(const ChoiceFunction& c, Vertex x, Vertex y);

/// t_{x,y} = a, t_{x,z} = s0, t_{y,z} = s1 for outside z, ½ elsewhere.
ProbMatrix biased_matrix(int n, Vertex x, Vertex y, const Rational& a, const Rational& s0,
                         const Rational& s1);

/// Average of prob_of(π·c) over the permutations π fixing `fixed` pointwise.
/// A full c with two fixed vertices takes the closed form through
/// pair_statistic/biased_matrix instead of enumerating.
ProbMatrix orbit_average(const ChoiceFunction& c, std::span<const Vertex> fixed,
                         const Limits& limits = {});

/// Same average, always by explicit stabilizer enumeration.
ProbMatrix orbit_average_enumerated(const ChoiceFunction& c, std::span<const Vertex> fixed,
                                    const Limits& limits = {});

}  // namespace majcl
