#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cotzeta {

template <class Real = double>
struct ComplexBoundedT {
  std::complex<Real> value;
  Real err = Real(0);
};

using ComplexBounded = ComplexBoundedT<double>;

namespace detail {

// e^{2 pi i n theta} with the angle reduced in long double; the incremental
// q*q*... product drifts too much for the conditionally convergent range.
template <class Real>
std::complex<Real> unit_power(long n, Real theta) {
  const long double t = static_cast<long double>(n) * static_cast<long double>(theta);
  const long double phase =
      2.0L * std::numbers::pi_v<long double> * (t - std::floor(t));
  return {static_cast<Real>(std::cos(phase)), static_cast<Real>(std::sin(phase))};
}

}  // namespace detail

/// Li_s(q) = sum_{n>=1} q^n / n^s on the unit circle, q = e^{2 pi i theta},
/// theta in (0,1).
///
/// s = 0 and s = 1 use the closed forms q/(1-q) and -log(1-q).  s > 1 is
/// summed directly with an Abel tail bound 2/|1-q| (N+1)^{-s}.  For
/// 0 < s < 1 the series only converges conditionally; the tail after a
/// direct block is resummed with an Euler-type transformation under a hard
/// order cap, and the reported err reflects where the transformation
/// stopped.  Accuracy degrades as theta approaches the endpoints (the
/// transformation ratio |q/(1-q)| blows up there); err stays honest.
template <class Real = double>
ComplexBoundedT<Real> polylog_unit_circle(Real s, Real theta) {
  using C = std::complex<Real>;
  constexpr Real eps = std::numeric_limits<Real>::epsilon();
  if (!(theta > Real(0) && theta < Real(1))) {
    throw std::domain_error("polylog_unit_circle: singularity at theta = 0 (mod 1)");
  }
  if (s < Real(0)) {
    throw std::domain_error("polylog_unit_circle: series diverges for s < 0");
  }
  const C q = detail::unit_power<Real>(1, theta);
  const C one_minus_q = Real(1) - q;
  if (s == Real(0)) {
    return {q / one_minus_q, 8 * eps / std::abs(one_minus_q)};
  }
  if (s == Real(1)) {
    return {-std::log(one_minus_q), 8 * eps * (1 + std::abs(std::log(std::abs(one_minus_q))))};
  }

  const Real rho = Real(1) / std::abs(one_minus_q);  // = |q/(1-q)| on the circle

  if (s > Real(1)) {
    // pick N so the Abel bound 2 rho (N+1)^{-s} meets the target, capped
    const Real target = Real(1e-13);
    const long cap = 1L << 21;
    long n_terms = static_cast<long>(std::ceil(std::pow(2 * rho / target, Real(1) / s)));
    n_terms = std::clamp(n_terms, 64L, cap);
    C sum{};
    Real sum_abs = 0;
    C qpow{Real(1), Real(0)};
    for (long n = 1; n <= n_terms; ++n) {
      qpow *= q;
      const Real a = std::pow(static_cast<Real>(n), -s);
      sum += qpow * a;
      sum_abs += a;
    }
    const Real tail = 2 * rho * std::pow(static_cast<Real>(n_terms + 1), -s);
    return {sum, tail + 8 * eps * (sum_abs + std::abs(sum))};
  }

  // 0 < s < 1: direct block, then Euler transformation of the remainder.
  const long block = std::clamp(static_cast<long>(std::ceil(8 * rho)), 64L, 1L << 18);
  C sum{};
  Real sum_abs = 0;
  for (long n = 1; n <= block; ++n) {
    const Real a = std::pow(static_cast<Real>(n), -s);
    sum += detail::unit_power<Real>(n, theta) * a;
    sum_abs += a;
  }
  // tail = q^{block+1}/(1-q) * sum_k (q/(1-q))^k  Delta^k b|_0,
  // b_j = (block+1+j)^{-s}
  constexpr int order_cap = 48;
  std::vector<Real> diff(order_cap + 1);
  for (int j = 0; j <= order_cap; ++j) {
    diff[j] = std::pow(static_cast<Real>(block + 1 + j), -s);
  }
  const Real b0 = diff[0];
  const C w = q / one_minus_q;
  C factor = detail::unit_power<Real>(block + 1, theta) / one_minus_q;
  C tail{};
  Real last_mag = std::numeric_limits<Real>::infinity();
  Real trunc = 0;
  int used = 0;
  for (int k = 0; k <= order_cap; ++k) {
    const C term = factor * diff[0];
    const Real mag = std::abs(term);
    trunc = mag;  // bound on what is not yet summed
    if (mag > last_mag) break;  // semi-convergent minimum reached
    tail += term;
    used = k;
    last_mag = mag;
    if (mag < eps * (std::abs(sum) + b0)) break;
    for (int j = 0; j + k < order_cap; ++j) diff[j] = diff[j + 1] - diff[j];
    factor *= w;
  }
  // rounding noise in the difference table grows like (2 rho)^k
  const Real noise = eps * b0 * rho * std::pow(std::max<Real>(2 * rho, 1), static_cast<Real>(used));
  const Real err = 2 * trunc + noise + 8 * eps * (sum_abs + std::abs(sum)) +
                   Real(4e-19) * std::pow(static_cast<Real>(block), Real(1.5) - s);
  return {sum + tail, err};
}

}  // namespace cotzeta
