#pragma once

#include <span>
#include <vector>

#include "qdyb/errors.hpp"
#include "qdyb/types.hpp"

namespace qdyb {

/// Entrywise comparison of weight vectors with tolerance.
bool weightsEqual(const Weight& a, const Weight& b, double tol = kWeightTol);

/// Finite-dimensional semisimple module over the abelian Lie algebra: one
/// weight vector per basis index.
class WeightedSpace {
 public:
  explicit WeightedSpace(std::vector<Weight> weights);

  /// C^n with the standard basis of weights (gl_n type).
  static WeightedSpace glnVector(int n);

  /// dim-dimensional space with the zero action (all weights zero).
  static WeightedSpace trivial(int dim, int rank);

  int dim() const { return static_cast<int>(weights_.size()); }
  int rank() const { return static_cast<int>(weights_.front().size()); }
  const Weight& weight(int i) const { return weights_[i]; }

  bool allZeroWeights(double tol = kWeightTol) const;

 private:
  std::vector<Weight> weights_;
};

bool sameWeights(const WeightedSpace& a, const WeightedSpace& b,
                 double tol = kWeightTol);

/// Tensor product space, lexicographic basis (first factor slowest), weights add.
WeightedSpace tensorProduct(const WeightedSpace& a, const WeightedSpace& b);

int tensorDim(std::span<const WeightedSpace> spaces);

/// Lexicographic flattening of a multi-index (first slot slowest).
int flattenIndex(std::span<const int> dims, std::span<const int> idx);
void unflattenIndex(int flat, std::span<const int> dims, std::span<int> idx_out);

Weight totalWeight(std::span<const WeightedSpace> spaces,
                   std::span<const int> multi_idx);

}  // namespace qdyb
