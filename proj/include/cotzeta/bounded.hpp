#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cotzeta {

/// A real value paired with a conservative absolute error bound.
///
/// The bound covers both the inexactness of the inputs and the rounding of
/// the operation itself.  Products and quotients carry a guard factor of 2
/// on top of the first-order propagation; this is cheap and keeps every
/// bound on the safe side without full interval arithmetic.
struct BoundedValue {
  double value = 0.0;
  double err = 0.0;
};

namespace detail {
inline constexpr double kEps = std::numeric_limits<double>::epsilon();
inline constexpr double kGuard = 2.0;
}  // namespace detail

inline BoundedValue bounded(double value, double err) {
  if (!(err >= 0.0) || !std::isfinite(err)) {
    throw std::invalid_argument("BoundedValue: error bound must be finite and >= 0");
  }
  return {value, err};
}

/// An exactly representable quantity (integers, dyadic rationals, ...).
inline BoundedValue exact(double value) { return {value, 0.0}; }

/// A libm-style result, correct to a couple of ulp.
inline BoundedValue rounded(double value) {
  return {value, 2.0 * std::abs(value) * detail::kEps};
}

inline BoundedValue operator+(BoundedValue a, BoundedValue b) {
  const double v = a.value + b.value;
  return {v, a.err + b.err + std::abs(v) * detail::kEps};
}

inline BoundedValue operator-(BoundedValue a, BoundedValue b) {
  const double v = a.value - b.value;
  return {v, a.err + b.err + std::abs(v) * detail::kEps};
}

inline BoundedValue operator-(BoundedValue a) { return {-a.value, a.err}; }

inline BoundedValue operator*(BoundedValue a, BoundedValue b) {
  const double v = a.value * b.value;
  const double first_order =
      std::abs(a.value) * b.err + std::abs(b.value) * a.err + a.err * b.err;
  return {v, detail::kGuard * first_order + std::abs(v) * detail::kEps};
}

inline BoundedValue operator/(BoundedValue a, BoundedValue b) {
  const double bmin = std::abs(b.value) - b.err;
  if (!(bmin > 0.0)) {
    throw std::domain_error("BoundedValue: divisor interval contains zero");
  }
  const double v = a.value / b.value;
  const double first_order = (a.err + std::abs(v) * b.err) / bmin;
  return {v, detail::kGuard * first_order + std::abs(v) * detail::kEps};
}

/// Multiply by an exact scalar.
inline BoundedValue scale(BoundedValue a, double c) {
  const double v = a.value * c;
  return {v, std::abs(c) * a.err + std::abs(v) * detail::kEps};
}

/// Add an exact scalar.
inline BoundedValue shift(BoundedValue a, double c) {
  const double v = a.value + c;
  return {v, a.err + std::abs(v) * detail::kEps};
}

inline BoundedValue abs(BoundedValue a) { return {std::abs(a.value), a.err}; }

inline BoundedValue log(BoundedValue a) {
  const double amin = a.value - a.err;
  if (!(amin > 0.0)) {
    throw std::domain_error("BoundedValue: log of interval touching zero");
  }
  const double v = std::log(a.value);
  return {v, detail::kGuard * (a.err / amin) + (std::abs(v) + 1.0) * detail::kEps};
}

inline BoundedValue exp(BoundedValue a) {
  const double v = std::exp(a.value);
  // |e^{x+d} - e^x| = e^x (e^d - 1) <= e^x expm1(|d|)
  return {v, detail::kGuard * v * std::expm1(a.err) + std::abs(v) * detail::kEps};
}

/// pow with an exact base > 0 and a bounded exponent.
inline BoundedValue pow(double base, BoundedValue s) {
  if (!(base > 0.0)) throw std::domain_error("BoundedValue: pow base must be > 0");
  const double v = std::pow(base, s.value);
  const double d = std::abs(std::log(base)) * s.err;
  return {v, detail::kGuard * v * std::expm1(d) + 2.0 * std::abs(v) * detail::kEps};
}

}  // namespace cotzeta
