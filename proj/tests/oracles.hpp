#pragma once

// Test-only reference computations, kept independent of the library's
// evaluation paths: straightforward long-double algorithms (adaptive
// Simpson, harmonic-number limits, classic Euler transformation of
// alternating series) that are slow but simple to trust.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

using Real = long double;

// --- adaptive Simpson quadrature -----------------------------------------

namespace detail {
inline Real simpson(const std::function<Real(Real)>& f, Real a, Real b, Real fa,
                    Real fm, Real fb) {
  return (b - a) / 6 * (fa + 4 * fm + fb);
}

inline Real adapt(const std::function<Real(Real)>& f, Real a, Real b, Real fa,
                  Real fm, Real fb, Real whole, Real tol, int depth) {
  const Real m = (a + b) / 2;
  const Real lm = (a + m) / 2;
  const Real rm = (m + b) / 2;
  const Real flm = f(lm);
  const Real frm = f(rm);
  const Real left = simpson(f, a, m, fa, flm, fm);
  const Real right = simpson(f, m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * tol) {
    return left + right + (left + right - whole) / 15;
  }
  return adapt(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}
}  // namespace detail

inline Real integrate(const std::function<Real(Real)>& f, Real a, Real b,
                      Real tol = 1e-16L) {
  const Real m = (a + b) / 2;
  const Real fa = f(a), fm = f(m), fb = f(b);
  return detail::adapt(f, a, b, fa, fm, fb, detail::simpson(f, a, b, fa, fm, fb),
                       tol, 48);
}

// --- Euler-Mascheroni via the accelerated H_n - log n limit ----------------

inline Real euler_gamma() {
  const int n = 1000;
  Real h = 0;
  for (int k = 1; k <= n; ++k) h += Real(1) / k;
  const Real x = Real(n);
  // Euler-Maclaurin corrections of the limit
  return h - std::log(x) - 1 / (2 * x) + 1 / (12 * x * x) -
         1 / (120 * x * x * x * x) + 1 / (252 * x * x * x * x * x * x);
}

// --- alternating series by direct block + classic Euler transformation ----
// (stable here: the transformation ratio is exactly 1/2)

inline Real alternating_sum(const std::function<Real(int)>& a) {
  const int block = 48;
  Real sum = 0;
  int sign = 1;
  for (int n = 0; n < block; ++n) {
    sum += sign * a(n);
    sign = -sign;
  }
  std::vector<Real> diff(64);
  for (int j = 0; j < 64; ++j) diff[j] = a(block + j);
  Real factor = sign * 0.5L;
  for (int k = 0; k < 64; ++k) {
    sum += factor * diff[0];
    for (int j = 0; j + k < 63; ++j) diff[j] = diff[j + 1] - diff[j];
    factor *= -0.5L;
  }
  return sum;
}

// zeta via the eta series, independent of the library's acceleration
inline Real zeta_eta(Real s) {
  const Real eta = alternating_sum([s](int n) { return std::pow(Real(n + 1), -s); });
  return eta / -std::expm1((1 - s) * std::log(Real(2)));
}

// zeta(k) for integer k >= 2 by direct summation with a tail correction
inline Real zeta_direct(int k) {
  Real sum = 0;
  const int n = 200000;
  for (int i = n; i >= 1; --i) sum += std::pow(Real(i), -Real(k));
  // int_n^inf + half-term correction
  const Real x = Real(n);
  return sum + std::pow(x, 1 - Real(k)) / (k - 1) - std::pow(x, -Real(k)) / 2 +
         k * std::pow(x, -Real(k) - 1) / 12;
}

}  // namespace oracle
