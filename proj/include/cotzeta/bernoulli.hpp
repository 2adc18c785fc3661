#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace cotzeta {

/// Largest Bernoulli order kept in the catalog.  B_32 is more than the
/// asymptotic expansions ever consume.
inline constexpr unsigned kMaxBernoulliOrder = 32;

/// Bernoulli number B_n in the B_1 = -1/2 convention, from the recurrence
/// sum_{k=0}^{n} C(n+1,k) B_k = 0, computed once and cached.
template <class Real = double>
Real bernoulli_number(unsigned n) {
  if (n > kMaxBernoulliOrder) {
    throw std::domain_error("bernoulli_number: order beyond catalog bound");
  }
  static const std::array<Real, kMaxBernoulliOrder + 1> table = [] {
    std::array<Real, kMaxBernoulliOrder + 1> b{};
    b[0] = Real(1);
    for (unsigned m = 1; m <= kMaxBernoulliOrder; ++m) {
      // binom = C(m+1, k), updated incrementally
      Real acc = Real(0);
      Real binom = Real(1);
      for (unsigned k = 0; k < m; ++k) {
        acc += binom * b[k];
        binom = binom * Real(m + 1 - k) / Real(k + 1);
      }
      b[m] = -acc / Real(m + 1);
    }
    return b;
  }();
  return table[n];
}

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}, Horner form.
template <class Real = double>
Real bernoulli_poly(unsigned n, Real x) {
  if (n > kMaxBernoulliOrder) {
    throw std::domain_error("bernoulli_poly: order beyond catalog bound");
  }
  if (!std::isfinite(static_cast<double>(x))) {
    throw std::domain_error("bernoulli_poly: x must be finite");
  }
  Real acc = bernoulli_number<Real>(0);
  Real binom = Real(1);
  for (unsigned k = 1; k <= n; ++k) {
    binom = binom * Real(n - k + 1) / Real(k);
    acc = acc * x + binom * bernoulli_number<Real>(k);
  }
  return acc;
}

/// Fractional part {t} = t - floor(t), exact for representable t >= 0.
template <class Real = double>
Real frac_part(Real t) {
  return t - std::floor(t);
}

}  // namespace cotzeta
