#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace majcl {

using Vertex = int;

/// A directed edge of Tor(c): `to` is the winner of the pair {from, to}.
struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  auto operator<=>(const Edge&) const = default;
};

/// An ordered pair (x0, x1) of distinct vertices, used for witnesses.
using VertexPair = std::pair<Vertex, Vertex>;

/// Position of the unordered pair {x, y} in the lexicographic list
/// (0,1), (0,2), ..., (0,n-1), (1,2), ... of all pairs on n vertices.
std::size_t pair_index(int n, Vertex x, Vertex y);
std::size_t pair_count(int n);

/// A possibly partial choice function on the 2-subsets of {0, ..., n-1}.
///
/// Each pair either has a winner (a member of the pair) or is Undefined,
/// which models abstention. The number of candidates is at least 3.
class ChoiceFunction {
 public:
  /// The empty function c_* on n candidates.
  explicit ChoiceFunction(int n);

  /// One entry per pair (in pair_index order): the winner, or -1 for Undefined.
  ChoiceFunction(int n, std::vector<Vertex> winners);

  /// Builds c with c{x,y} = y exactly for the listed edges (x, y).
  static ChoiceFunction from_edges(int n, std::span<const Edge> edges);

  /// Full tournament whose bit p (pair_index order) says the higher vertex wins.
  static ChoiceFunction from_full_code(int n, std::uint64_t code);

  /// Base-3 digit per pair: 0 Undefined, 1 lower vertex wins, 2 higher wins.
  static ChoiceFunction from_ternary_code(int n, std::uint64_t code);

  int size() const noexcept { return n_; }

  std::optional<Vertex> winner(Vertex x, Vertex y) const;
  bool is_decided(Vertex x, Vertex y) const;
  /// True iff c{x,y} = y, i.e. (x, y) is an edge of Tor(c).
  bool has_edge(Vertex x, Vertex y) const;
  bool is_full() const;
  std::size_t decided_count() const;

  /// Tor(c) in lexicographic order.
  std::vector<Edge> edges() const;

  std::uint64_t full_code() const;
  std::uint64_t ternary_code() const;

  const std::vector<Vertex>& winners() const noexcept { return winners_; }

  friend bool operator==(const ChoiceFunction&, const ChoiceFunction&) = default;

 private:
  int n_;
  std::vector<Vertex> winners_;
};

/// Total order matching the numeric order of ternary codes, without overflow.
bool code_less(const ChoiceFunction& a, const ChoiceFunction& b);

struct CodeLess {
  bool operator()(const ChoiceFunction& a, const ChoiceFunction& b) const {
    return code_less(a, b);
  }
};

ChoiceFunction make_choice_function(int n, std::span<const Edge> edges);
std::vector<Edge> tor_edges(const ChoiceFunction& c);
ChoiceFunction dual(const ChoiceFunction& c);

/// Linear order where c{i,j} = max(i,j) (the top candidate is n-1).
ChoiceFunction linear_order(int n);
/// Linear order given as a ranking, most preferred first.
ChoiceFunction linear_order_from_ranking(std::span<const Vertex> ranking);
/// Rotational tournament: i -> i+j mod n for 1 <= j <= (n-1)/2. Needs odd n.
ChoiceFunction rotational(int n);

std::string describe(const ChoiceFunction& c);

}  // namespace majcl
