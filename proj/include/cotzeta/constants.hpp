#pragma once

#include <cmath>
#include <stdexcept>

#include "cotzeta/bounded.hpp"
#include "cotzeta/digamma.hpp"

namespace cotzeta {

/// Shared constants.  gamma is the Euler-Mascheroni constant, b = B_1(gamma)
/// = gamma - 1/2 and b_bar = gamma + 1/2 are the conjectured slope/intercept
/// constants, exp_neg_gamma feeds the logarithmic digamma bounds.
struct Constants {
  BoundedValue gamma;
  BoundedValue exp_neg_gamma;
  BoundedValue b;
  BoundedValue b_bar;
  BoundedValue pi;
};

namespace detail {

inline constexpr double kGamma = 0.57721566490153286060651209008240243104;
inline constexpr double kExpNegGamma = 0.56145948356688516982414321479098773676;
inline constexpr double kPi = 3.14159265358979323846264338327950288420;

inline Constants make_constants() {
  Constants c;
  c.gamma = {kGamma, 1e-16};
  c.exp_neg_gamma = {kExpNegGamma, 1e-16};
  c.b = {kGamma - 0.5, 1e-16};          // exact subtraction in binary
  c.b_bar = {kGamma + 0.5, 3e-16};      // addition may round the last bit
  c.pi = {kPi, 1e-16};

  // Cross-check the stored constants against an independent evaluation
  // before anyone relies on them.
  const BoundedValue psi1 = digamma(1.0);
  if (std::abs(c.gamma.value + psi1.value) > c.gamma.err + psi1.err + 1e-15) {
    throw std::logic_error("Constants: gamma disagrees with -digamma(1)");
  }
  const double e = std::exp(-c.gamma.value);
  if (std::abs(e - c.exp_neg_gamma.value) > 4e-16) {
    throw std::logic_error("Constants: exp(-gamma) disagrees with stored value");
  }
  return c;
}

}  // namespace detail

/// The verified constant table (checked once, on first use).
inline const Constants& constants() {
  static const Constants table = detail::make_constants();
  return table;
}

inline BoundedValue euler_gamma() { return constants().gamma; }

}  // namespace cotzeta
