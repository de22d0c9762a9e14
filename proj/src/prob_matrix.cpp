#include "majcl/prob_matrix.hpp"

#include "majcl/error.hpp"
#include "majcl/permutation.hpp"

namespace majcl {

ProbMatrix::ProbMatrix(int n) : n_(n), upper_(pair_count(n), half()) {
  if (n < 3) throw Error(ErrorKind::TooFewCandidates, "need at least 3 candidates");
}

Rational ProbMatrix::at(Vertex x, Vertex y) const {
  if (x < 0 || y < 0 || x >= n_ || y >= n_) throw Error(ErrorKind::IndexOutOfRange, "matrix index");
  if (x == y) throw Error(ErrorKind::SamePair, "matrix has no diagonal");
  const Rational& stored = upper_[pair_index(n_, x, y)];
  return x < y ? stored : Rational(1 - stored);
}

void ProbMatrix::set(Vertex x, Vertex y, const Rational& value) {
  if (x < 0 || y < 0 || x >= n_ || y >= n_) throw Error(ErrorKind::IndexOutOfRange, "matrix index");
  if (x == y) throw Error(ErrorKind::SamePair, "matrix has no diagonal");
  if (value < 0 || value > 1) {
    throw Error(ErrorKind::OutOfUnitInterval, "entry " + to_string(value) + " outside [0,1]");
  }
  upper_[pair_index(n_, x, y)] = x < y ? value : Rational(1 - value);
}

ProbMatrix prob_of(const ChoiceFunction& d) {
  const int n = d.size();
  ProbMatrix t(n);
  for (const Edge& e : d.edges()) t.set(e.from, e.to, 1);
  return t;
}

ProbMatrix dual_matrix(const ProbMatrix& t) {
  const int n = t.size();
  ProbMatrix out(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) out.set(x, y, 1 - t.at(x, y));
  }
  return out;
}

ChoiceFunction maj(const ProbMatrix& t) {
  const int n = t.size();
  std::vector<Vertex> winners(pair_count(n), -1);
  std::size_t p = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y, ++p) {
      const Rational v = t.at(x, y);
      if (v > half()) {
        winners[p] = y;
      } else if (v < half()) {
        winners[p] = x;
      }
    }
  }
  return ChoiceFunction(n, std::move(winners));
}

ProbMatrix apply_permutation(const ProbMatrix& t, const Permutation& pi) {
  const int n = t.size();
  if (pi.size() != n) throw Error(ErrorKind::DimensionMismatch, "permutation degree differs from n");
  ProbMatrix out(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) out.set(pi(x), pi(y), t.at(x, y));
  }
  return out;
}

ProbMatrix convex_combine(std::span<const WeightedMatrix> parts) {
  if (parts.empty()) throw Error(ErrorKind::WeightsDoNotSumToOne, "empty combination");
  const int n = parts.front().second.size();
  Rational total = 0;
  std::vector<Rational> sums(pair_count(n), 0);
  for (const auto& [weight, t] : parts) {
    if (t.size() != n) throw Error(ErrorKind::DimensionMismatch, "matrices of different size");
    if (weight <= 0) throw Error(ErrorKind::WeightsDoNotSumToOne, "non-positive weight");
    total += weight;
    std::size_t p = 0;
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y, ++p) sums[p] += weight * t.at(x, y);
    }
  }
  if (total != 1) {
    throw Error(ErrorKind::WeightsDoNotSumToOne, "weights sum to " + to_string(total));
  }
  ProbMatrix out(n);
  std::size_t p = 0;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y, ++p) out.set(x, y, sums[p]);
  }
  return out;
}

}  // namespace majcl
