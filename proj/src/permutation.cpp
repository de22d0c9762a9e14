#include "majcl/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "majcl/error.hpp"

namespace majcl {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::InvalidPermutation, "images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i])] = static_cast<Vertex>(i);
  }
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw Error(ErrorKind::DimensionMismatch, "composing permutations of different degree");
  }
  std::vector<Vertex> images(static_cast<std::size_t>(inner.size()));
  for (Vertex x = 0; x < inner.size(); ++x) images[static_cast<std::size_t>(x)] = outer(inner(x));
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) { return pointwise_stabilizer(n, {}); }

std::vector<Permutation> pointwise_stabilizer(int n, std::span<const Vertex> fixed) {
  std::vector<bool> is_fixed(static_cast<std::size_t>(n), false);
  for (Vertex v : fixed) {
    if (v < 0 || v >= n) throw Error(ErrorKind::IndexOutOfRange, "fixed vertex out of range");
    is_fixed[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Vertex> movable;
  for (Vertex v = 0; v < n; ++v) {
    if (!is_fixed[static_cast<std::size_t>(v)]) movable.push_back(v);
  }
  std::vector<Permutation> out;
  std::vector<Vertex> arrangement = movable;
  do {
    std::vector<Vertex> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t i = 0; i < movable.size(); ++i) {
      images[static_cast<std::size_t>(movable[i])] = arrangement[i];
    }
    out.emplace_back(std::move(images));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

std::optional<Permutation> least_mapping(int n, std::span<const Vertex> from,
                                         std::span<const Vertex> to) {
  if (from.size() != to.size()) throw Error(ErrorKind::DimensionMismatch, "mapping lengths differ");
  std::vector<Vertex> images(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (std::size_t i = 0; i < from.size(); ++i) {
    const auto u = static_cast<std::size_t>(from[i]);
    const auto x = static_cast<std::size_t>(to[i]);
    if (from[i] < 0 || from[i] >= n || to[i] < 0 || to[i] >= n) {
      throw Error(ErrorKind::IndexOutOfRange, "mapping vertex out of range");
    }
    if (images[u] != -1 && images[u] != to[i]) return std::nullopt;
    if (images[u] == -1 && used[x]) return std::nullopt;
    images[u] = to[i];
    used[x] = true;
  }
  Vertex next = 0;
  for (auto& image : images) {
    if (image != -1) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    image = next;
    used[static_cast<std::size_t>(next)] = true;
  }
  return Permutation(std::move(images));
}

ChoiceFunction apply_permutation(const ChoiceFunction& c, const Permutation& pi) {
  const int n = c.size();
  if (pi.size() != n) throw Error(ErrorKind::DimensionMismatch, "permutation degree differs from n");
  std::vector<Vertex> winners(pair_count(n), -1);
  std::size_t p = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y, ++p) {
      const Vertex w = c.winners()[p];
      if (w == -1) continue;
      winners[pair_index(n, pi(x), pi(y))] = pi(w);
    }
  }
  return ChoiceFunction(n, std::move(winners));
}

std::vector<ChoiceFunction> sym_closure(const ChoiceFunction& d, const Limits& limits) {
  if (d.size() > limits.orbit_cap) {
    throw Error(ErrorKind::OrbitTooLarge, "n=" + std::to_string(d.size()) + " exceeds orbit cap " +
                                              std::to_string(limits.orbit_cap));
  }
  std::set<ChoiceFunction, CodeLess> orbit;
  for (const Permutation& pi : all_permutations(d.size())) orbit.insert(apply_permutation(d, pi));
  return {orbit.begin(), orbit.end()};
}

namespace {

// Backtracking search for π with π·d = e, pruned by valency signatures.
bool extend(const ChoiceFunction& d, const ChoiceFunction& e, std::vector<Vertex>& images,
            std::vector<bool>& used, Vertex x, const std::vector<int>& out_d,
            const std::vector<int>& out_e, const std::vector<int>& und_d,
            const std::vector<int>& und_e) {
  const int n = d.size();
  if (x == n) return true;
  for (Vertex target = 0; target < n; ++target) {
    const auto t = static_cast<std::size_t>(target);
    const auto ux = static_cast<std::size_t>(x);
    if (used[t] || out_d[ux] != out_e[t] || und_d[ux] != und_e[t]) continue;
    bool consistent = true;
    for (Vertex y = 0; y < x && consistent; ++y) {
      const auto wd = d.winner(x, y);
      const auto we = e.winner(target, images[static_cast<std::size_t>(y)]);
      if (wd.has_value() != we.has_value()) {
        consistent = false;
      } else if (wd) {
        consistent = (*wd == x) == (*we == target);
      }
    }
    if (!consistent) continue;
    images[ux] = target;
    used[t] = true;
    if (extend(d, e, images, used, x + 1, out_d, out_e, und_d, und_e)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace

std::optional<Permutation> find_relabeling(const ChoiceFunction& d, const ChoiceFunction& e) {
  const int n = d.size();
  if (e.size() != n) return std::nullopt;
  std::vector<int> out_d(static_cast<std::size_t>(n)), out_e(out_d), und_d(out_d), und_e(out_d);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      out_d[static_cast<std::size_t>(x)] += d.has_edge(x, y);
      out_e[static_cast<std::size_t>(x)] += e.has_edge(x, y);
      und_d[static_cast<std::size_t>(x)] += !d.is_decided(x, y);
      und_e[static_cast<std::size_t>(x)] += !e.is_decided(x, y);
    }
  }
  std::vector<Vertex> images(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  if (!extend(d, e, images, used, 0, out_d, out_e, und_d, und_e)) return std::nullopt;
  return Permutation(std::move(images));
}

}  // namespace majcl
