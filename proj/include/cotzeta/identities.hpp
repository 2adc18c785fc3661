#pragma once

#include <cmath>
#include <stdexcept>

#include "cotzeta/bounded.hpp"
#include "cotzeta/constants.hpp"
#include "cotzeta/cotangent.hpp"
#include "cotzeta/digamma.hpp"
#include "cotzeta/zeta.hpp"

namespace cotzeta {

/// Two independently evaluated sides of an identity at a point.
struct IdentityResidual {
  double s = 0.0;
  BoundedValue lhs;
  BoundedValue rhs;
  double residual = 0.0;  // |lhs - rhs|
  double relative = 0.0;  // residual / max(1, |lhs|)
};

namespace detail {

inline IdentityResidual make_residual(double s, BoundedValue lhs, BoundedValue rhs) {
  IdentityResidual r;
  r.s = s;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::abs(lhs.value - rhs.value);
  r.relative = r.residual / std::max(1.0, std::abs(lhs.value));
  return r;
}

// Gamma(z) for z in (-1,0) u (0,10^k): one recurrence step lifts negative
// arguments onto the positive axis, where exp(log_gamma) applies.
inline BoundedValue gamma_function(double z) {
  if (z > 0.0) return exp(log_gamma(z));
  if (z > -1.0 && z != 0.0) {
    return exp(log_gamma(z + 1.0)) / exact(z);
  }
  throw std::domain_error("gamma_function: argument must be > -1 and nonzero");
}

}  // namespace detail

/// Riemann's functional equation on (0,1):
///   zeta(1-s) = 2 Gamma(s) cos(pi s / 2) (2 pi)^{-s} zeta(s).
/// The left side takes the fractional-part-integral route and the right the
/// eta route, so the residual compares independent evaluations.
inline IdentityResidual check_functional_equation(double s) {
  if (!(s > 0.0 && s < 1.0)) {
    throw std::domain_error("check_functional_equation: s must lie in (0,1)");
  }
  const BoundedValue lhs = zeta(1.0 - s, ZetaRoute::FractionalPartIntegral);
  const BoundedValue gam = detail::gamma_function(s);
  const BoundedValue cosine = rounded(std::cos(constants().pi.value * s / 2.0));
  const BoundedValue twopi_pow = pow(2.0 * constants().pi.value, exact(-s));
  const BoundedValue rhs =
      scale(gam * cosine * twopi_pow * zeta(s, ZetaRoute::EtaSeries), 2.0);
  return detail::make_residual(s, lhs, rhs);
}

/// The formal cotangent identity
///   pi cot(pi s) = ((2 pi)^{2s} zeta(1-2s)/zeta(2s))^2 Gamma(1-2s)/(2 Gamma(2s)),
/// checked away from the s = 1/2 pole of zeta(2s).  Negative zeta arguments
/// go through the integral route.  Residuals grow like 1/|2s-1| near the
/// pole; callers scale their tolerance accordingly.
inline IdentityResidual check_cot_identity(double s) {
  if (!(s > 0.0 && s < 1.0) || s == 0.5) {
    throw std::domain_error("check_cot_identity: s must lie in (0,1) with s != 1/2");
  }
  const double a = 1.0 - 2.0 * s;  // in (-1,1) \ {0}
  const BoundedValue lhs = scale(rounded(cot_pi(s)), constants().pi.value);
  const BoundedValue z_num =
      zeta(a, a > 0.0 ? ZetaRoute::EtaSeries : ZetaRoute::FractionalPartIntegral);
  const BoundedValue z_den = zeta(2.0 * s, ZetaRoute::EtaSeries);
  const BoundedValue ratio = pow(2.0 * constants().pi.value, exact(2.0 * s)) * z_num / z_den;
  const BoundedValue rhs =
      scale(ratio * ratio * detail::gamma_function(a) / detail::gamma_function(2.0 * s), 0.5);
  return detail::make_residual(s, lhs, rhs);
}

/// Reflection identity psi(1-x) - psi(x) = pi cot(pi x) on (0,1).
inline IdentityResidual check_reflection(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("check_reflection: x must lie in (0,1)");
  }
  const BoundedValue lhs = digamma(1.0 - x) - digamma(x);
  const BoundedValue rhs = scale(rounded(cot_pi(x)), constants().pi.value);
  return detail::make_residual(x, lhs, rhs);
}

}  // namespace cotzeta
