#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "majcl/choice_function.hpp"
#include "majcl/limits.hpp"

namespace majcl {

/// A bijection on {0, ..., n-1}, stored as its image sequence.
class Permutation {
 public:
  explicit Permutation(std::vector<Vertex> images);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<Vertex>& images() const noexcept { return images_; }

  Permutation inverse() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Vertex> images_;
};

/// (outer ∘ inner)(x) = outer(inner(x)).
Permutation compose(const Permutation& outer, const Permutation& inner);

/// All n! permutations in lexicographic order of their images.
std::vector<Permutation> all_permutations(int n);

/// Permutations fixing every vertex of `fixed`, lexicographic order.
std::vector<Permutation> pointwise_stabilizer(int n, std::span<const Vertex> fixed);

/// Lexicographically least σ with σ(from[i]) = to[i]; nullopt if the
/// assignment is inconsistent.
std::optional<Permutation> least_mapping(int n, std::span<const Vertex> from,
                                         std::span<const Vertex> to);

/// c'{π(x),π(y)} = π(c{x,y}); Undefined pairs stay Undefined.
ChoiceFunction apply_permutation(const ChoiceFunction& c, const Permutation& pi);

/// The orbit of d under all relabelings, deduplicated and sorted by code.
std::vector<ChoiceFunction> sym_closure(const ChoiceFunction& d, const Limits& limits = {});

/// Some π with apply_permutation(d, π) == e, if one exists.
std::optional<Permutation> find_relabeling(const ChoiceFunction& d, const ChoiceFunction& e);

}  // namespace majcl
