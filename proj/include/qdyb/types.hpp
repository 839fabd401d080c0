#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qdyb {

using Cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Weight vector in the dual of the abelian Lie algebra (length = rank).
using Weight = Eigen::VectorXcd;

/// Entrywise tolerance for comparing weight vectors. gl_n-type weights are
/// integer vectors, so this comparison is exact for them.
inline constexpr double kWeightTol = 1e-9;

inline const Cx kImag{0.0, 1.0};

/// Principal-branch complex power a^b = exp(b Log a), Log the principal
/// logarithm. Fixed here so all modules (and ports) agree on branches.
inline Cx cpow(Cx a, Cx b) { return std::exp(b * std::log(a)); }

}  // namespace qdyb
