#pragma once

#include <cmath>
#include <stdexcept>

#include "cotzeta/bernoulli.hpp"
#include "cotzeta/bounded.hpp"
#include "cotzeta/constants.hpp"
#include "cotzeta/errors.hpp"

namespace cotzeta {

/// Evaluation route for zeta on the real axis.
///
/// EtaSeries: zeta(s) = (sum (-1)^{n-1} n^{-s}) / (1 - 2^{1-s}), valid s > 0.
/// FractionalPartIntegral: zeta(s) = 1/2 - 1/(1-s) - s I(s) with
///   I(s) = int_1^inf ({t} - 1/2) t^{-s-1} dt, valid -1 < s < 1.
/// Auto picks EtaSeries for s > 0 and the integral for s in (-1, 0].
enum class ZetaRoute { EtaSeries, FractionalPartIntegral, Auto };

namespace detail {

inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

// Cohen-Villegas-Zagier acceleration of the alternating series
// sum_{k>=0} (-1)^k a_k with a_k = (k+1)^{-s}.  The a_k are totally
// monotone for s > 0, so the theoretical relative error is
// ~2 (3+sqrt 8)^{-n}; with n = 32 that is ~3e-25 and rounding dominates.
inline BoundedValue eta_series(double s) {
  constexpr int n = 32;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  double sum = 0.0;
  double sum_abs = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    const double term = c * std::pow(static_cast<double>(k + 1), -s);
    sum += term;
    sum_abs += std::abs(term);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  const double value = sum / d;
  const double method = 4.0 * std::pow(3.0 + std::sqrt(8.0), -n);
  const double rounding = kEps * (2.0 * sum_abs / d + 4.0 * std::abs(value) + 1.0);
  return {value, method + rounding};
}

// 1 - 2^{1-s} without cancellation.
inline BoundedValue eta_to_zeta_denominator(double s) {
  const double arg = (1.0 - s) * kLn2;
  const double v = -std::expm1(arg);
  return {v, 4.0 * kEps * (std::abs(v) + std::abs(arg) * std::exp(std::min(arg, 1.0)))};
}

// Remainder int_N^inf ({t}-1/2) t^{-x-1} dt by repeated integration by
// parts against the periodic Bernoulli polynomials:
//   R_N(x) = -sum_{k=1}^K B_{2k}/(2k)! (x+1)...(x+2k-2) N^{-x-2k+1} + E,
// |E| <= 4 |first omitted term|.  Validated against closed-form partial
// sums in the test suite.
struct EmTail {
  double value;
  double bound;
};

inline EmTail integral_tail(int big_n, double x) {
  constexpr unsigned K = 8;
  const double n = static_cast<double>(big_n);
  double sum = 0.0;
  double prod = 1.0;             // (x+1)...(x+2k-2), empty product at k=1
  double npow = std::pow(n, -x - 1.0);
  const double ninv2 = 1.0 / (n * n);
  double factorial = 2.0;        // (2k)!
  double term = 0.0;
  for (unsigned k = 1; k <= K; ++k) {
    if (k > 1) {
      prod *= (x + 2.0 * k - 3.0) * (x + 2.0 * k - 2.0);
      factorial *= (2.0 * k) * (2.0 * k - 1.0);
      npow *= ninv2;
    }
    term = bernoulli_number<double>(2 * k) / factorial * prod * npow;
    sum += term;
  }
  const double omitted = std::abs(bernoulli_number<double>(2 * (K + 1))) /
                         (factorial * (2.0 * K + 1.0) * (2.0 * K + 2.0)) * prod *
                         (x + 2.0 * K - 1.0) * (x + 2.0 * K) * npow * ninv2;
  return {-sum, 4.0 * omitted};
}

// Stieltjes expansion of zeta(s) + 1/(1-s) about s = 1:
//   Z(1-d) = g0 + g1 d + g2 d^2/2! + g3 d^3/3! + ...
// Used for 1-s below this cutoff, where the pole subtraction would
// otherwise wipe out the digits the squeeze margins live on.
inline constexpr double kNearOneCutoff = 1e-3;

inline BoundedValue regularized_zeta_near_one(double delta) {
  constexpr double g1 = -0.07281584548367672486058638;
  constexpr double g2 = -0.00969036319287231848453039;
  constexpr double g3 = 0.00205383442030334586616005;
  constexpr double g4 = 0.00232537006546730005746817;
  constexpr double g5 = 0.00079332381730106270175333;
  const double g0 = constants().gamma.value;
  const double value =
      g0 + delta * (g1 + delta * (g2 / 2 + delta * (g3 / 6 + delta * (g4 / 24 + delta * g5 / 120))));
  const double truncation = 1e-3 * std::pow(delta, 6.0);
  return {value, constants().gamma.err + truncation + 4.0 * kEps * std::abs(value)};
}

}  // namespace detail

/// Closed form of I_n(x) = int_n^{n+1} (t - n - 1/2) t^{-x-1} dt for
/// n >= 1, x in (-1,1).  The antiderivative t^{1-x}/(1-x) + (n+1/2)t^{-x}/x
/// is rearranged through expm1/log1p so the bracket difference does not
/// cancel; the x -> 0 limit uses the logarithmic form.
inline double integral_term(int n, double x) {
  if (n < 1) throw std::domain_error("integral_term: n must be >= 1");
  if (!(x > -1.0 && x < 1.0)) {
    throw std::domain_error("integral_term: x must lie in (-1,1)");
  }
  const double nn = static_cast<double>(n);
  const double l = std::log1p(1.0 / nn);
  if (x == 0.0) {
    return 1.0 - (nn + 0.5) * l;
  }
  const double t1 = std::pow(nn, 1.0 - x) * std::expm1((1.0 - x) * l) / (1.0 - x);
  const double t2 = (nn + 0.5) * std::pow(nn, -x) * std::expm1(-x * l) / x;
  return t1 + t2;
}

/// Conservative magnitude bound |I_n(x)| <= (x+1)(x+2)/(6 n^{x+2})
/// (midpoint expansion with a factor-2 guard; checked against quadrature
/// in the tests).
inline double integral_term_bound(int n, double x) {
  return (x + 1.0) * (x + 2.0) / 6.0 * std::pow(static_cast<double>(n), -x - 2.0);
}

/// I(x) = sum_{n>=1} I_n(x): closed-form partial sum plus the
/// integration-by-parts tail, grown until the rigorous tail bound meets
/// target_err.  Negative on (0,1).
inline BoundedValue integral_sum(double x, double target_err, int cap = (1 << 20)) {
  if (!(x > -1.0 && x < 1.0)) {
    throw std::domain_error("integral_sum: x must lie in (-1,1)");
  }
  if (!(target_err > 0.0)) {
    throw std::domain_error("integral_sum: target_err must be positive");
  }
  double partial = 0.0;
  double partial_abs = 0.0;
  int next = 1;
  for (int split = 8; split <= cap; split *= 2) {
    for (; next < split; ++next) {
      const double t = integral_term(next, x);
      partial += t;
      // the two halves of the closed form are ~n^{-x} before cancelling
      partial_abs += std::pow(static_cast<double>(next), -x);
    }
    const detail::EmTail tail = detail::integral_tail(split, x);
    if (tail.bound <= target_err) {
      const double rounding = 6.0 * detail::kEps * (partial_abs + std::abs(partial) + 1.0);
      return {partial + tail.value, tail.bound + rounding};
    }
  }
  throw convergence_error("integral_sum: tail bound not met before term cap");
}

/// zeta(s) for s in (-1,1) u (1,40].
inline BoundedValue zeta(double s, ZetaRoute route = ZetaRoute::Auto) {
  if (!std::isfinite(s)) throw std::domain_error("zeta: argument must be finite");
  if (s == 1.0) throw std::domain_error("zeta: pole at s = 1");
  if (!(s > -1.0 && s <= 40.0)) {
    throw std::domain_error("zeta: argument outside supported range (-1,1) u (1,40]");
  }
  if (route == ZetaRoute::Auto) {
    route = s > 0.0 ? ZetaRoute::EtaSeries : ZetaRoute::FractionalPartIntegral;
  }
  if (route == ZetaRoute::EtaSeries) {
    if (!(s > 0.0)) {
      throw std::invalid_argument("zeta: EtaSeries route requires s > 0");
    }
    return detail::eta_series(s) / detail::eta_to_zeta_denominator(s);
  }
  if (!(s < 1.0)) {
    throw std::invalid_argument("zeta: FractionalPartIntegral route requires s < 1");
  }
  const double pole = 1.0 / (1.0 - s);
  const BoundedValue pole_bv{pole, 3.0 * detail::kEps * std::abs(pole)};
  const BoundedValue i_bv = integral_sum(s, 1e-14);
  return exact(0.5) - pole_bv - scale(i_bv, s);
}

/// Z(x) = zeta(x) + 1/(1-x) on [0,1], continuously extended to the
/// endpoints (1/2 at 0, gamma at 1).  Strictly increasing on (0,1).
/// Near x = 1 the Stieltjes expansion replaces the pole subtraction.
inline BoundedValue regularized_zeta(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("regularized_zeta: argument must lie in [0,1]");
  }
  if (x == 0.0) return exact(0.5);
  if (x == 1.0) return constants().gamma;
  const double delta = 1.0 - x;
  if (delta < detail::kNearOneCutoff) {
    return detail::regularized_zeta_near_one(delta);
  }
  const BoundedValue z = zeta(x, ZetaRoute::EtaSeries);
  const double pole = 1.0 / delta;
  return z + BoundedValue{pole, 3.0 * detail::kEps * pole};
}

}  // namespace cotzeta
