#include "qdyb/weighted_space.hpp"

namespace qdyb {

bool weightsEqual(const Weight& a, const Weight& b, double tol) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

WeightedSpace::WeightedSpace(std::vector<Weight> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw DomainError("WeightedSpace: need at least one basis index");
  }
  const auto rank = weights_.front().size();
  for (const auto& w : weights_) {
    if (w.size() != rank) {
      throw DomainError("WeightedSpace: weight vectors must share one rank");
    }
  }
}

WeightedSpace WeightedSpace::glnVector(int n) {
  if (n < 1) throw DomainError("glnVector: n must be positive");
  std::vector<Weight> weights(n, Weight::Zero(n));
  for (int i = 0; i < n; ++i) weights[i][i] = 1.0;
  return WeightedSpace(std::move(weights));
}

WeightedSpace WeightedSpace::trivial(int dim, int rank) {
  if (dim < 1 || rank < 1) throw DomainError("trivial: dim and rank must be positive");
  return WeightedSpace(std::vector<Weight>(dim, Weight::Zero(rank)));
}

bool WeightedSpace::allZeroWeights(double tol) const {
  const Weight zero = Weight::Zero(rank());
  for (const auto& w : weights_) {
    if (!weightsEqual(w, zero, tol)) return false;
  }
  return true;
}

bool sameWeights(const WeightedSpace& a, const WeightedSpace& b, double tol) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) return false;
  for (int i = 0; i < a.dim(); ++i) {
    if (!weightsEqual(a.weight(i), b.weight(i), tol)) return false;
  }
  return true;
}

WeightedSpace tensorProduct(const WeightedSpace& a, const WeightedSpace& b) {
  if (a.rank() != b.rank()) {
    throw DomainError("tensorProduct: factors must share the rank");
  }
  std::vector<Weight> weights;
  weights.reserve(static_cast<size_t>(a.dim()) * b.dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) {
      weights.push_back(a.weight(i) + b.weight(j));
    }
  }
  return WeightedSpace(std::move(weights));
}

int tensorDim(std::span<const WeightedSpace> spaces) {
  int d = 1;
  for (const auto& s : spaces) d *= s.dim();
  return d;
}

int flattenIndex(std::span<const int> dims, std::span<const int> idx) {
  int flat = 0;
  for (size_t s = 0; s < dims.size(); ++s) flat = flat * dims[s] + idx[s];
  return flat;
}

void unflattenIndex(int flat, std::span<const int> dims, std::span<int> idx_out) {
  for (size_t s = dims.size(); s-- > 0;) {
    idx_out[s] = flat % dims[s];
    flat /= dims[s];
  }
}

Weight totalWeight(std::span<const WeightedSpace> spaces,
                   std::span<const int> multi_idx) {
  Weight w = Weight::Zero(spaces.front().rank());
  for (size_t s = 0; s < spaces.size(); ++s) {
    w += spaces[s].weight(multi_idx[s]);
  }
  return w;
}

}  // namespace qdyb
