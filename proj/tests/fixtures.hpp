#pragma once

#include <doctest.h>

#include <initializer_list>
#include <vector>

#include "majcl/choice_function.hpp"
#include "majcl/error.hpp"
#include "majcl/rational.hpp"

namespace fixtures {

using majcl::ChoiceFunction;
using majcl::Edge;

inline ChoiceFunction make(int n, std::initializer_list<Edge> edges) {
  const std::vector<Edge> list(edges);
  return majcl::make_choice_function(n, list);
}

// 0 -> 1 -> 2 with 0 -> 2: the winner of each pair is the larger vertex.
inline ChoiceFunction t3() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline ChoiceFunction c3() { return make(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline ChoiceFunction empty(int n = 3) { return ChoiceFunction(n); }
inline ChoiceFunction single_edge() { return make(3, {{0, 1}}); }
inline ChoiceFunction l4() { return majcl::linear_order(4); }
inline ChoiceFunction r5() { return majcl::rotational(5); }

// Kind of the majcl::Error thrown by fn; fails the test if nothing is thrown.
template <typename Fn>
majcl::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const majcl::Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return majcl::ErrorKind::InternalCheckFailed;
}

inline majcl::Rational q(long p, long r = 1) { return majcl::make_rational(p, r); }

}  // namespace fixtures
