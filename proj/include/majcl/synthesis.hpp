#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "majcl/choice_function.hpp"
#include "majcl/limits.hpp"
#include "majcl/prob_matrix.hpp"
#include "majcl/profile.hpp"
#include "majcl/realizability.hpp"

namespace majcl {

struct SynthesisStage {
  std::string label;
  WeightedProfile profile;
  ProbMatrix induced;
};

/// Stage-by-stage record of a construction, ending in the integer profile.
struct SynthesisTrace {
  std::vector<SynthesisStage> stages;
  std::optional<IntegerProfile> final;
};

/// Distribution over relabelings of d whose induced matrix has
/// t_{x,y} = a > ½ and ½ everywhere else. Needs an unbalanced full d.
WeightedProfile pair_bias_profile(const ChoiceFunction& d, Vertex x, Vertex y, const Limits& limits = {});

/// Same, reusing a certificate already computed for d.
WeightedProfile pair_bias_profile(const ChoiceFunction& d, const FCertificate& cert, Vertex x, Vertex y,
                                  const Limits& limits = {});

/// Induced matrix t^{<x,y,z>}: 1 on (x,y), (y,z), (z,x), ½ off the triangle.
/// Needs a balanced full d.
WeightedProfile triangle_profile(const ChoiceFunction& d, Vertex x, Vertex y, Vertex z,
                                 const Limits& limits = {});

/// Uniform fan average of triangle_profile(d, x0, x_i, x_{i+1}); cycle edges
/// get ½ + 1/(2(len - 2)), every other pair ½.
WeightedProfile cycle_profile(const ChoiceFunction& d, std::span<const Vertex> cycle,
                              const Limits& limits = {});

/// Every relabeling of d counted once (n! voters before merging): all ties.
IntegerProfile tie_profile(const ChoiceFunction& d, const Limits& limits = {});

/// Multiplicity = weight × lcm of all weight denominators.
IntegerProfile rationalize(const WeightedProfile& w);

/// Integer profile over relabelings of d whose strict majority is c.
IntegerProfile realize_target(const ChoiceFunction& d, const ChoiceFunction& c, const Limits& limits = {});
SynthesisTrace realize_target_traced(const ChoiceFunction& d, const ChoiceFunction& c,
                                     const Limits& limits = {});

/// Balanced branch: one shortest covering cycle per Tor(c) edge.
IntegerProfile realize_balanced_target(const ChoiceFunction& d, const ChoiceFunction& c,
                                       const Limits& limits = {});

/// Classic two-orders-per-pair construction over linear orders.
IntegerProfile mcgarvey_classic(int n, const ChoiceFunction& c);

}  // namespace majcl
