#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cotzeta {

namespace detail {

// x in (0, 1/2].  Near 1/2 the complement form tan(pi(1/2-x)) keeps the
// absolute error at machine level; below 1/4 the direct quotient is the
// better-conditioned one.
template <class Real>
Real cot_pi_core(Real x) {
  constexpr Real pi_v = std::numbers::pi_v<Real>;
  if (x >= Real(0.25)) {
    return std::tan(pi_v * (Real(0.5) - x));
  }
  return std::cos(pi_v * x) / std::sin(pi_v * x);
}

}  // namespace detail

/// cot(pi x) on (0,1), reduced symmetrically about 1/2 so that
/// cot_pi(1-x) == -cot_pi(x) exactly whenever 1-x is representable.
template <class Real = double>
Real cot_pi(Real x) {
  if (!(x > Real(0)) || !(x < Real(1))) {
    throw std::domain_error("cot_pi: argument must lie in (0,1)");
  }
  if (x == Real(0.5)) return Real(0);
  if (x > Real(0.5)) return -detail::cot_pi_core(Real(1) - x);
  return detail::cot_pi_core(x);
}

}  // namespace cotzeta
