#pragma once

#include "qdyb/errors.hpp"
#include "qdyb/types.hpp"

namespace qdyb {

/// Elliptic modulus tau with Im(tau) > 0 and the derived nome e^{pi i tau}.
struct EllipticModulus {
  Cx tau;
  Cx nome;

  explicit EllipticModulus(Cx tau_value);
};

/// Base of the q-Gamma function, 0 < |p| < 1.
struct QNome {
  Cx p;

  explicit QNome(Cx p_value);
};

/// Truncation controls shared by the series/product evaluators.
struct SfConfig {
  double truncation_eps = 1e-15;
  int term_cap = 10000;
  double pole_tol = 1e-12;
};

/// First Jacobi theta function,
///   theta1(z; tau) = 2 sum_{n>=0} (-1)^n e^{pi i tau (n+1/2)^2} sin((2n+1) pi z),
/// summed until the next term drops below truncation_eps times the partial sum.
/// The series is odd in z termwise, so theta1(-z) == -theta1(z) to rounding.
Cx theta1(Cx z, const EllipticModulus& tau, const SfConfig& cfg = {});

/// q-Gamma function with nome p,
///   Gamma_p(x) = (1-p)^{1-x} prod_{n>=0} (1-p^{n+1})/(1-p^{n+x}),
/// truncated once a factor differs from 1 by less than truncation_eps.
/// Throws PoleError when a denominator factor vanishes within pole_tol.
Cx qgamma(Cx x, const QNome& p, const SfConfig& cfg = {});

struct QGammaResult {
  Cx value;
  int factors;  // number of product factors consumed
};

/// As qgamma, also reporting the factor count. If forced_factors > 0 the
/// product runs exactly that many factors regardless of the truncation test.
QGammaResult qgammaDetailed(Cx x, const QNome& p, const SfConfig& cfg = {},
                            int forced_factors = 0);

/// Distance from z to the nearest point of the lattice Z + tau Z
/// (the zero set of theta1(.; tau)).
double latticeDistance(Cx z, Cx tau);

}  // namespace qdyb
