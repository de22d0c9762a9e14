#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "majcl/choice_function.hpp"
#include "majcl/limits.hpp"
#include "majcl/prob_matrix.hpp"
#include "majcl/rational.hpp"

namespace majcl {

/// Strong components of Tor(c).
struct SccDecomposition {
  std::vector<int> component_of;               // vertex -> component id
  std::vector<std::vector<Vertex>> components;  // ids ordered by least member
  std::vector<Edge> inter_edges;               // Tor edges between components
};

SccDecomposition strong_components(const ChoiceFunction& c);

bool is_balanced(const ChoiceFunction& c);
bool is_balanced_matrix(const ProbMatrix& t);
bool is_super_balanced(const ProbMatrix& t);

/// Every Tor edge lies on a directed cycle (decided through strong components).
bool is_pseudo_balanced(const ChoiceFunction& c);

/// Shortest directed cycle through the edge (u, v) of Tor(c), as the vertex
/// sequence (u, v, ..., w) with w -> u closing it. Among shortest cycles the
/// lexicographically least sequence is returned. nullopt if (u,v) is on no cycle.
std::optional<std::vector<Vertex>> shortest_cycle_through(const ChoiceFunction& c, Edge e);

/// Per-edge path search; must agree with is_pseudo_balanced.
bool is_pseudo_balanced_by_paths(const ChoiceFunction& c);

/// First nonempty proper subset Y (bitmask, increasing popcount then
/// increasing mask) violating the partition⁺ / partition condition.
std::optional<std::uint32_t> partition_plus_violation(const ChoiceFunction& c, const Limits& limits = {});
std::optional<std::uint32_t> partition_violation(const ChoiceFunction& c, const Limits& limits = {});

bool is_partition_plus_balanced(const ChoiceFunction& c, const Limits& limits = {});
bool is_partition_balanced(const ChoiceFunction& c, const Limits& limits = {});

struct WeightBalance {
  bool weight_balanced = false;
  Rational margin;                  // optimum ε, when the program is feasible
  std::optional<ProbMatrix> witness;  // balanced t̄ with maj(t̄) = c when weight_balanced
};

/// Maximizes ε over balanced t̄ with t_{x,y} ≥ ½ + ε on Tor edges and
/// t_{x,y} = ½ on undecided pairs.
WeightBalance weight_balance(const ChoiceFunction& c);
bool is_weight_balanced(const ChoiceFunction& c);

}  // namespace majcl
