#include "qdyb/special_functions.hpp"

#include <cmath>
#include <numbers>

namespace qdyb {

namespace {
constexpr double kPi = std::numbers::pi;
}

EllipticModulus::EllipticModulus(Cx tau_value) : tau(tau_value) {
  if (!(tau.imag() > 0.0)) {
    throw DomainError("EllipticModulus: Im(tau) must be positive");
  }
  nome = std::exp(kImag * kPi * tau);
}

QNome::QNome(Cx p_value) : p(p_value) {
  const double mod = std::abs(p);
  if (!(mod > 0.0) || !(mod < 1.0)) {
    throw DomainError("QNome: need 0 < |p| < 1");
  }
}

Cx theta1(Cx z, const EllipticModulus& tau, const SfConfig& cfg) {
  const Cx log_nome = kImag * kPi * tau.tau;
  Cx sum = 0.0;
  for (int n = 0;; ++n) {
    const double half = n + 0.5;
    const Cx term = 2.0 * (n % 2 == 0 ? 1.0 : -1.0) *
                    std::exp(log_nome * (half * half)) *
                    std::sin((2.0 * n + 1.0) * kPi * z);
    if (n > 0 && std::abs(term) <= cfg.truncation_eps * std::abs(sum)) {
      return sum;
    }
    if (n >= cfg.term_cap) {
      throw ConvergenceError("theta1: term cap reached before truncation criterion");
    }
    sum += term;
  }
}

QGammaResult qgammaDetailed(Cx x, const QNome& p, const SfConfig& cfg,
                            int forced_factors) {
  const Cx prefactor = cpow(1.0 - p.p, 1.0 - x);
  const Cx px = cpow(p.p, x);
  Cx prod = 1.0;
  Cx p_pow = 1.0;  // p^n
  for (int n = 0;; ++n) {
    const Cx den = 1.0 - p_pow * px;  // 1 - p^{n+x}
    if (std::abs(den) < cfg.pole_tol) {
      throw PoleError("qgamma: denominator factor 1 - p^{n+x} vanishes at n = " +
                      std::to_string(n));
    }
    const Cx factor = (1.0 - p_pow * p.p) / den;  // (1 - p^{n+1}) / (1 - p^{n+x})
    prod *= factor;
    if (forced_factors > 0) {
      if (n + 1 >= forced_factors) {
        return {prefactor * prod, n + 1};
      }
    } else if (std::abs(factor - 1.0) < cfg.truncation_eps) {
      return {prefactor * prod, n + 1};
    }
    if (n >= cfg.term_cap) {
      throw ConvergenceError("qgamma: factor cap reached before truncation criterion");
    }
    p_pow *= p.p;
  }
}

Cx qgamma(Cx x, const QNome& p, const SfConfig& cfg) {
  return qgammaDetailed(x, p, cfg).value;
}

double latticeDistance(Cx z, Cx tau) {
  // Solve z = x + y tau over the reals, reduce x, y to [-1/2, 1/2).
  const double y = z.imag() / tau.imag();
  const double x = z.real() - y * tau.real();
  const double dx = x - std::round(x);
  const double dy = y - std::round(y);
  return std::abs(Cx(dx, 0.0) + Cx(dy, 0.0) * tau);
}

}  // namespace qdyb
