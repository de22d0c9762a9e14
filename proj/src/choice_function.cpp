#include "majcl/choice_function.hpp"

#include <algorithm>
#include <sstream>

#include "majcl/error.hpp"

namespace majcl {

namespace {

constexpr Vertex kUndefined = -1;

void check_vertex(int n, Vertex x) {
  if (x < 0 || x >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                "vertex " + std::to_string(x) + " not in 0.." + std::to_string(n - 1));
  }
}

void check_candidates(int n) {
  if (n < 3) {
    throw Error(ErrorKind::TooFewCandidates, "need at least 3 candidates, got " + std::to_string(n));
  }
}

// Ternary digit of a pair: 0 Undefined, 1 lower vertex wins, 2 higher wins.
int digit_of(Vertex winner, Vertex lo) {
  if (winner == kUndefined) return 0;
  return winner == lo ? 1 : 2;
}

}  // namespace

std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

std::size_t pair_index(int n, Vertex x, Vertex y) {
  if (x > y) std::swap(x, y);
  // pairs with a smaller first vertex: Σ_{i<x} (n-1-i)
  const auto ux = static_cast<std::size_t>(x);
  const auto un = static_cast<std::size_t>(n);
  return ux * (2 * un - ux - 1) / 2 + static_cast<std::size_t>(y - x - 1);
}

ChoiceFunction::ChoiceFunction(int n) : n_(n) {
  check_candidates(n);
  winners_.assign(pair_count(n), kUndefined);
}

ChoiceFunction::ChoiceFunction(int n, std::vector<Vertex> winners)
    : n_(n), winners_(std::move(winners)) {
  check_candidates(n);
  if (winners_.size() != pair_count(n)) {
    throw Error(ErrorKind::DimensionMismatch, "winner table has wrong length");
  }
  std::size_t p = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y, ++p) {
      const Vertex w = winners_[p];
      if (w != kUndefined && w != x && w != y) {
        throw Error(ErrorKind::IndexOutOfRange, "winner is not a member of its pair");
      }
    }
  }
}

ChoiceFunction ChoiceFunction::from_edges(int n, std::span<const Edge> edges) {
  check_candidates(n);
  std::vector<Vertex> winners(pair_count(n), kUndefined);
  for (const Edge& e : edges) {
    check_vertex(n, e.from);
    check_vertex(n, e.to);
    if (e.from == e.to) {
      throw Error(ErrorKind::SamePair, "self-loop at " + std::to_string(e.from));
    }
    Vertex& slot = winners[pair_index(n, e.from, e.to)];
    if (slot != kUndefined && slot != e.to) {
      throw Error(ErrorKind::ConflictingEdge, "both (" + std::to_string(e.from) + "," +
                                                  std::to_string(e.to) + ") and its reverse given");
    }
    slot = e.to;
  }
  return ChoiceFunction(n, std::move(winners));
}

ChoiceFunction ChoiceFunction::from_full_code(int n, std::uint64_t code) {
  check_candidates(n);
  std::vector<Vertex> winners(pair_count(n));
  std::size_t p = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y, ++p) {
      winners[p] = ((code >> p) & 1U) ? y : x;
    }
  }
  return ChoiceFunction(n, std::move(winners));
}

ChoiceFunction ChoiceFunction::from_ternary_code(int n, std::uint64_t code) {
  check_candidates(n);
  std::vector<Vertex> winners(pair_count(n));
  std::size_t p = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y, ++p) {
      const auto digit = code % 3;
      code /= 3;
      winners[p] = digit == 0 ? kUndefined : (digit == 1 ? x : y);
    }
  }
  return ChoiceFunction(n, std::move(winners));
}

std::optional<Vertex> ChoiceFunction::winner(Vertex x, Vertex y) const {
  check_vertex(n_, x);
  check_vertex(n_, y);
  if (x == y) throw Error(ErrorKind::SamePair, "pair needs two distinct vertices");
  const Vertex w = winners_[pair_index(n_, x, y)];
  if (w == kUndefined) return std::nullopt;
  return w;
}

bool ChoiceFunction::is_decided(Vertex x, Vertex y) const { return winner(x, y).has_value(); }

bool ChoiceFunction::has_edge(Vertex x, Vertex y) const { return winner(x, y) == y; }

bool ChoiceFunction::is_full() const {
  return std::none_of(winners_.begin(), winners_.end(), [](Vertex w) { return w == kUndefined; });
}

std::size_t ChoiceFunction::decided_count() const {
  return static_cast<std::size_t>(
      std::count_if(winners_.begin(), winners_.end(), [](Vertex w) { return w != kUndefined; }));
}

std::vector<Edge> ChoiceFunction::edges() const {
  std::vector<Edge> out;
  std::size_t p = 0;
  for (Vertex x = 0; x < n_; ++x) {
    for (Vertex y = x + 1; y < n_; ++y, ++p) {
      const Vertex w = winners_[p];
      if (w == y) out.push_back({x, y});
      if (w == x) out.push_back({y, x});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t ChoiceFunction::full_code() const {
  if (!is_full()) throw Error(ErrorKind::NotFull, "full code of a partial function");
  if (winners_.size() > 64) throw Error(ErrorKind::ScopeTooLarge, "too many pairs for a 64-bit code");
  std::uint64_t code = 0;
  std::size_t p = 0;
  for (Vertex x = 0; x < n_; ++x) {
    for (Vertex y = x + 1; y < n_; ++y, ++p) {
      if (winners_[p] == y) code |= std::uint64_t{1} << p;
    }
  }
  return code;
}

std::uint64_t ChoiceFunction::ternary_code() const {
  if (winners_.size() > 40) throw Error(ErrorKind::ScopeTooLarge, "too many pairs for a 64-bit code");
  std::uint64_t code = 0;
  std::uint64_t scale = 1;
  std::size_t p = 0;
  for (Vertex x = 0; x < n_; ++x) {
    for (Vertex y = x + 1; y < n_; ++y, ++p) {
      code += scale * static_cast<std::uint64_t>(digit_of(winners_[p], x));
      scale *= 3;
    }
  }
  return code;
}

bool code_less(const ChoiceFunction& a, const ChoiceFunction& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const int n = a.size();
  // most significant digit is the last pair
  for (Vertex x = n - 2; x >= 0; --x) {
    for (Vertex y = n - 1; y > x; --y) {
      const auto p = pair_index(n, x, y);
      const int da = digit_of(a.winners()[p], x);
      const int db = digit_of(b.winners()[p], x);
      if (da != db) return da < db;
    }
  }
  return false;
}

ChoiceFunction make_choice_function(int n, std::span<const Edge> edges) {
  return ChoiceFunction::from_edges(n, edges);
}

std::vector<Edge> tor_edges(const ChoiceFunction& c) { return c.edges(); }

ChoiceFunction dual(const ChoiceFunction& c) {
  const int n = c.size();
  std::vector<Vertex> winners(c.winners());
  std::size_t p = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y, ++p) {
      if (winners[p] == x) {
        winners[p] = y;
      } else if (winners[p] == y) {
        winners[p] = x;
      }
    }
  }
  return ChoiceFunction(n, std::move(winners));
}

ChoiceFunction linear_order(int n) {
  check_candidates(n);
  std::vector<Vertex> winners(pair_count(n));
  std::size_t p = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y, ++p) winners[p] = y;
  }
  return ChoiceFunction(n, std::move(winners));
}

ChoiceFunction linear_order_from_ranking(std::span<const Vertex> ranking) {
  const int n = static_cast<int>(ranking.size());
  check_candidates(n);
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    check_vertex(n, ranking[static_cast<std::size_t>(i)]);
    int& slot = rank[static_cast<std::size_t>(ranking[static_cast<std::size_t>(i)])];
    if (slot != -1) throw Error(ErrorKind::RepeatedVertex, "ranking repeats a candidate");
    slot = i;
  }
  std::vector<Vertex> winners(pair_count(n));
  std::size_t p = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y, ++p) {
      winners[p] = rank[static_cast<std::size_t>(x)] < rank[static_cast<std::size_t>(y)] ? x : y;
    }
  }
  return ChoiceFunction(n, std::move(winners));
}

ChoiceFunction rotational(int n) {
  check_candidates(n);
  if (n % 2 == 0) {
    throw Error(ErrorKind::CyclicNeedsOddN, "rotational tournament needs odd n, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (int j = 1; j <= (n - 1) / 2; ++j) edges.push_back({i, (i + j) % n});
  }
  return ChoiceFunction::from_edges(n, edges);
}

std::string describe(const ChoiceFunction& c) {
  std::ostringstream out;
  out << "n=" << c.size() << " {";
  bool first = true;
  for (const Edge& e : c.edges()) {
    out << (first ? "" : ",") << e.from << "->" << e.to;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace majcl
