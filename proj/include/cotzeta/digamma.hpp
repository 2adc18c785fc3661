#pragma once

#include <cmath>
#include <stdexcept>

#include "cotzeta/bernoulli.hpp"
#include "cotzeta/bounded.hpp"

namespace cotzeta {

namespace detail {

// Both expansions below are used from z >= kAsymptoticCutoff on; with eight
// B_{2k} terms the first omitted term is ~3e-18 for psi and ~2e-18 for
// log-gamma there, far below the rounding budget.  The term count is a
// parameter so tests can confirm the first-omitted-term bound by truncating
// earlier.
inline constexpr double kAsymptoticCutoff = 10.0;
inline constexpr unsigned kAsymptoticTerms = 8;

inline constexpr double kLogTwoPi = 1.8378770664093454835606594728112353;

inline BoundedValue digamma_terms(double x, unsigned terms) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("digamma: argument must be positive and finite");
  }
  double shift_sum = 0.0;
  double shift_abs = 0.0;
  double z = x;
  while (z < kAsymptoticCutoff) {
    shift_sum -= 1.0 / z;
    shift_abs += 1.0 / z;
    z += 1.0;
  }
  const double log_z = std::log(z);
  const double inv2 = 1.0 / (z * z);
  double series = 0.0;
  double zpow = inv2;
  for (unsigned k = 1; k <= terms; ++k) {
    series += bernoulli_number<double>(2 * k) / (2.0 * k) * zpow;
    zpow *= inv2;
  }
  const double value = shift_sum + log_z - 0.5 / z - series;
  // B_{2k} alternate in sign and the terms decrease for z >= 10, so the
  // omitted tail is bounded by its first term.
  const double omitted =
      std::abs(bernoulli_number<double>(2 * (terms + 1))) / (2.0 * (terms + 1)) * zpow;
  const double rounding =
      4.0 * kEps * (std::abs(value) + shift_abs + std::abs(log_z) + 1.0);
  return {value, omitted + rounding};
}

inline BoundedValue log_gamma_terms(double x, unsigned terms) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("log_gamma: argument must be positive and finite");
  }
  double shift_sum = 0.0;
  double shift_abs = 0.0;
  double z = x;
  while (z < kAsymptoticCutoff) {
    const double lg = std::log(z);
    shift_sum -= lg;
    shift_abs += std::abs(lg);
    z += 1.0;
  }
  const double log_z = std::log(z);
  const double inv2 = 1.0 / (z * z);
  double series = 0.0;
  double zpow = 1.0 / z;
  for (unsigned k = 1; k <= terms; ++k) {
    series += bernoulli_number<double>(2 * k) / (2.0 * k * (2.0 * k - 1.0)) * zpow;
    zpow *= inv2;
  }
  const double value = shift_sum + (z - 0.5) * log_z - z + 0.5 * kLogTwoPi + series;
  const double omitted =
      std::abs(bernoulli_number<double>(2 * (terms + 1))) /
      (2.0 * (terms + 1) * (2.0 * (terms + 1) - 1.0)) * zpow;
  const double rounding =
      4.0 * kEps * (std::abs(value) + shift_abs + z * std::abs(log_z) + z + 1.0);
  return {value, omitted + rounding};
}

}  // namespace detail

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0: upward recurrence
/// psi(x) = psi(x+1) - 1/x until the argument reaches the asymptotic
/// region, then psi(z) ~ log z - 1/(2z) - sum_k B_{2k} / (2k z^{2k}).
inline BoundedValue digamma(double x) {
  return detail::digamma_terms(x, detail::kAsymptoticTerms);
}

/// log Gamma(x) for x > 0, same shift-then-asymptotic scheme.
inline BoundedValue log_gamma(double x) {
  return detail::log_gamma_terms(x, detail::kAsymptoticTerms);
}

}  // namespace cotzeta
