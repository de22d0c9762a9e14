#include "majcl/balance.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "majcl/error.hpp"
#include "majcl/lp.hpp"
#include "majcl/valency.hpp"

namespace majcl {

namespace {

std::vector<std::vector<Vertex>> out_lists(const ChoiceFunction& c) {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(c.size()));
  for (const Edge& e : c.edges()) out[static_cast<std::size_t>(e.from)].push_back(e.to);
  return out;
}

std::vector<std::vector<bool>> reachability(const ChoiceFunction& c) {
  const auto n = static_cast<std::size_t>(c.size());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const Edge& e : c.edges()) reach[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.to)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach;
}

}  // namespace

SccDecomposition strong_components(const ChoiceFunction& c) {
  const auto n = static_cast<std::size_t>(c.size());
  const auto reach = reachability(c);
  SccDecomposition scc;
  scc.component_of.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (scc.component_of[x] != -1) continue;
    const int id = static_cast<int>(scc.components.size());
    scc.components.emplace_back();
    for (std::size_t y = x; y < n; ++y) {
      if (reach[x][y] && reach[y][x]) {
        scc.component_of[y] = id;
        scc.components.back().push_back(static_cast<Vertex>(y));
      }
    }
  }
  for (const Edge& e : c.edges()) {
    if (scc.component_of[static_cast<std::size_t>(e.from)] != scc.component_of[static_cast<std::size_t>(e.to)]) {
      scc.inter_edges.push_back(e);
    }
  }
  return scc;
}

bool is_balanced(const ChoiceFunction& c) {
  const Rational target = make_rational(c.size() - 1, 2);
  for (Vertex x = 0; x < c.size(); ++x) {
    if (valency(c, x) != target) return false;
  }
  return true;
}

bool is_balanced_matrix(const ProbMatrix& t) {
  const int n = t.size();
  const Rational target = make_rational(n - 1, 2);
  for (Vertex x = 0; x < n; ++x) {
    Rational row = 0;
    for (Vertex y = 0; y < n; ++y) {
      if (y != x) row += t.at(x, y);
    }
    if (row != target) return false;
  }
  return true;
}

bool is_super_balanced(const ProbMatrix& t) {
  for (Vertex x = 0; x < t.size(); ++x) {
    for (Vertex y = x + 1; y < t.size(); ++y) {
      if (t.at(x, y) != half()) return false;
    }
  }
  return true;
}

bool is_pseudo_balanced(const ChoiceFunction& c) { return strong_components(c).inter_edges.empty(); }

std::optional<std::vector<Vertex>> shortest_cycle_through(const ChoiceFunction& c, Edge e) {
  if (!c.has_edge(e.from, e.to)) return std::nullopt;
  const auto n = static_cast<std::size_t>(c.size());
  const auto out = out_lists(c);
  // BFS distances to e.from along Tor edges (reverse search).
  std::vector<std::vector<Vertex>> in(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (Vertex y : out[x]) in[static_cast<std::size_t>(y)].push_back(static_cast<Vertex>(x));
  }
  std::vector<int> dist(n, -1);
  std::deque<Vertex> queue{e.from};
  dist[static_cast<std::size_t>(e.from)] = 0;
  while (!queue.empty()) {
    const Vertex w = queue.front();
    queue.pop_front();
    for (Vertex p : in[static_cast<std::size_t>(w)]) {
      if (dist[static_cast<std::size_t>(p)] == -1) {
        dist[static_cast<std::size_t>(p)] = dist[static_cast<std::size_t>(w)] + 1;
        queue.push_back(p);
      }
    }
  }
  if (dist[static_cast<std::size_t>(e.to)] == -1) return std::nullopt;
  std::vector<Vertex> cycle{e.from, e.to};
  Vertex current = e.to;
  while (dist[static_cast<std::size_t>(current)] > 1) {
    Vertex next = -1;
    for (Vertex w : out[static_cast<std::size_t>(current)]) {  // out lists are sorted
      if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(current)] - 1) {
        next = w;
        break;
      }
    }
    cycle.push_back(next);
    current = next;
  }
  return cycle;
}

bool is_pseudo_balanced_by_paths(const ChoiceFunction& c) {
  const auto edges = c.edges();
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return shortest_cycle_through(c, e).has_value();
  });
}

namespace {

void check_subset_scope(const ChoiceFunction& c, const Limits& limits) {
  if (c.size() > limits.subset_cap || c.size() > 31) {
    throw Error(ErrorKind::TooManyCandidates,
                "subset scan over n=" + std::to_string(c.size()) + " exceeds the cap");
  }
}

// Masks of nonempty proper subsets, increasing popcount then increasing value.
std::vector<std::uint32_t> subset_order(int n) {
  std::vector<std::uint32_t> masks;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t m = 1; m < full; ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  return masks;
}

struct Crossing {
  bool into = false;   // some x ∉ Y, y ∈ Y with c{x,y} = y
  bool out_of = false;  // some x ∉ Y, y ∈ Y with c{x,y} = x
};

Crossing crossing(const std::vector<Edge>& edges, std::uint32_t mask) {
  Crossing result;
  for (const Edge& e : edges) {
    const bool from_in = (mask >> e.from) & 1U;
    const bool to_in = (mask >> e.to) & 1U;
    if (!from_in && to_in) result.into = true;
    if (from_in && !to_in) result.out_of = true;
  }
  return result;
}

}  // namespace

std::optional<std::uint32_t> partition_plus_violation(const ChoiceFunction& c, const Limits& limits) {
  check_subset_scope(c, limits);
  const auto edges = c.edges();
  for (std::uint32_t mask : subset_order(c.size())) {
    if (!crossing(edges, mask).into) return mask;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> partition_violation(const ChoiceFunction& c, const Limits& limits) {
  check_subset_scope(c, limits);
  const auto edges = c.edges();
  for (std::uint32_t mask : subset_order(c.size())) {
    const Crossing cross = crossing(edges, mask);
    if (cross.into != cross.out_of) return mask;
  }
  return std::nullopt;
}

bool is_partition_plus_balanced(const ChoiceFunction& c, const Limits& limits) {
  return !partition_plus_violation(c, limits).has_value();
}

bool is_partition_balanced(const ChoiceFunction& c, const Limits& limits) {
  return !partition_violation(c, limits).has_value();
}

WeightBalance weight_balance(const ChoiceFunction& c) {
  const int n = c.size();
  // One variable t_{x,y} (x < y) per decided pair, then the margin ε.
  std::vector<int> var_of(pair_count(n), -1);
  int vars = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (c.is_decided(x, y)) var_of[pair_index(n, x, y)] = vars++;
    }
  }
  const int margin = vars++;
  LinearProgram lp(vars);
  for (int j = 0; j < margin; ++j) lp.upper_bounds[static_cast<std::size_t>(j)] = Rational(1);
  lp.upper_bounds[static_cast<std::size_t>(margin)] = Rational(1);

  for (Vertex x = 0; x < n; ++x) {
    std::vector<Rational> row(static_cast<std::size_t>(vars), Rational(0));
    Rational rhs = make_rational(n - 1, 2);
    for (Vertex y = 0; y < n; ++y) {
      if (y == x) continue;
      const int v = var_of[pair_index(n, x, y)];
      if (v < 0) {
        rhs -= half();
      } else if (x < y) {
        row[static_cast<std::size_t>(v)] += 1;
      } else {
        row[static_cast<std::size_t>(v)] -= 1;
        rhs -= 1;
      }
    }
    lp.add(std::move(row), Relation::Equal, rhs);
  }
  for (const Edge& e : c.edges()) {
    std::vector<Rational> row(static_cast<std::size_t>(vars), Rational(0));
    const auto v = static_cast<std::size_t>(var_of[pair_index(n, e.from, e.to)]);
    row[static_cast<std::size_t>(margin)] = -1;
    if (e.from < e.to) {
      row[v] = 1;
      lp.add(std::move(row), Relation::GreaterEqual, half());
    } else {
      row[v] = -1;
      lp.add(std::move(row), Relation::GreaterEqual, -half());
    }
  }

  const MarginOutcome outcome = max_margin_feasible(lp);
  WeightBalance result;
  result.margin = outcome.margin;
  result.weight_balanced = outcome.feasible;
  if (outcome.feasible && outcome.witness) {
    ProbMatrix t(n);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        const int v = var_of[pair_index(n, x, y)];
        if (v >= 0) t.set(x, y, (*outcome.witness)[static_cast<std::size_t>(v)]);
      }
    }
    if (!is_balanced_matrix(t) || maj(t) != c) {
      throw Error(ErrorKind::InternalCheckFailed, "weight-balance witness does not certify " + describe(c));
    }
    result.witness = std::move(t);
  }
  return result;
}

bool is_weight_balanced(const ChoiceFunction& c) { return weight_balance(c).weight_balanced; }

}  // namespace majcl
