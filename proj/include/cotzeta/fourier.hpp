#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cotzeta/errors.hpp"
#include "cotzeta/polylog.hpp"

namespace cotzeta {

/// Fourier coefficients a_n = int_0^1 f(x) e^{-2 pi i n x} dx of a
/// periodized function, by trapezoid quadrature at two refinements.
struct FourierReport {
  std::string function_name;
  std::vector<std::complex<double>> coefficients;  // a_0 .. a_N from the finer grid
  int quadrature_points = 0;                       // requested refinement P (fine pass is 2P)
  double quadrature_error_estimate = 0.0;          // max_n |a_n(P) - a_n(2P)|
};

namespace detail {

// Roots of unity e^{2 pi i k / (2P)}; P is a power of two, so every node
// phase is an exact table index and the sums carry no phase drift.
inline std::vector<std::complex<double>> unit_root_table(int two_p) {
  std::vector<std::complex<double>> t(two_p);
  for (int k = 0; k < two_p; ++k) {
    t[k] = unit_power<double>(k, 1.0 / two_p);
  }
  return t;
}

// One quadrature pass.  With a boundary value (the periodized mean at the
// jump) the nodes are j/P; without one the samples shift to midpoints so
// endpoint singularities are never touched.
inline std::vector<std::complex<double>> fourier_pass(
    const std::function<double(double)>& f, int max_n, int points,
    const std::optional<double>& boundary_value) {
  const bool trapezoid = boundary_value.has_value();
  std::vector<double> sample(points);
  for (int j = 0; j < points; ++j) {
    const double x = trapezoid ? static_cast<double>(j) / points : (j + 0.5) / points;
    sample[j] = (trapezoid && j == 0) ? *boundary_value : f(x);
  }
  const auto roots = unit_root_table(2 * points);
  std::vector<std::complex<double>> coeff(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    std::complex<double> acc{};
    for (int j = 0; j < points; ++j) {
      const long num = trapezoid ? 2L * n * j : static_cast<long>(n) * (2L * j + 1);
      acc += sample[j] * std::conj(roots[num % (2L * points)]);
    }
    coeff[n] = acc / static_cast<double>(points);
  }
  return coeff;
}

}  // namespace detail

inline FourierReport fourier_coefficients(const std::function<double(double)>& f,
                                          int max_n, int quad_points,
                                          std::optional<double> boundary_value = {},
                                          std::string name = "f") {
  if (max_n < 0) throw std::invalid_argument("fourier_coefficients: max_n must be >= 0");
  if (quad_points < 2 * std::max(1, max_n) || (quad_points & (quad_points - 1)) != 0) {
    throw std::invalid_argument(
        "fourier_coefficients: quad_points must be a power of two >= 2 max_n");
  }
  FourierReport rep;
  rep.function_name = std::move(name);
  rep.quadrature_points = quad_points;
  const auto coarse = detail::fourier_pass(f, max_n, quad_points, boundary_value);
  const auto fine = detail::fourier_pass(f, max_n, 2 * quad_points, boundary_value);
  double est = 0.0;
  double scale = 1.0;
  for (int n = 0; n <= max_n; ++n) {
    est = std::max(est, std::abs(coarse[n] - fine[n]));
    scale = std::max(scale, std::abs(fine[n]));
  }
  if (!(est < 0.05 * scale)) {
    throw singularity_error(
        "fourier_coefficients: refinement fails to converge (non-integrable singularity?)");
  }
  rep.coefficients = fine;
  rep.quadrature_error_estimate = est;
  return rep;
}

/// a_{-n} assembled from separately accumulated cosine and sine sums, for
/// the conjugate-symmetry check a_{-n} = conj(a_n) of real-valued f.
inline std::complex<double> fourier_coefficient_neg(
    const std::function<double(double)>& f, int n, int quad_points,
    std::optional<double> boundary_value = {}) {
  const bool trapezoid = boundary_value.has_value();
  const auto roots = detail::unit_root_table(2 * quad_points);
  double cos_sum = 0.0;
  double sin_sum = 0.0;
  for (int j = 0; j < quad_points; ++j) {
    const double x = trapezoid ? static_cast<double>(j) / quad_points : (j + 0.5) / quad_points;
    const double v = (trapezoid && j == 0) ? *boundary_value : f(x);
    const long num = trapezoid ? 2L * n * j : static_cast<long>(n) * (2L * j + 1);
    const std::complex<double> w = roots[num % (2L * quad_points)];
    cos_sum += v * w.real();
    sin_sum += v * w.imag();
  }
  return {cos_sum / quad_points, sin_sum / quad_points};
}

/// |sum_{n>=1} a_n q^n - sum_{n>=0} a_{pn} q^n| over the truncated lists,
/// q = e^{2 pi i theta}: the direct numerical rendering of the decimation
/// identity satisfied by Kubert coefficient sequences.
inline double decimation_check(const std::vector<std::complex<double>>& a, int p,
                               double theta) {
  if (p < 1) throw std::domain_error("decimation_check: p must be >= 1");
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::domain_error("decimation_check: theta must lie in (0,1)");
  }
  std::complex<double> full{};
  for (std::size_t n = 1; n < a.size(); ++n) {
    full += a[n] * detail::unit_power<double>(static_cast<long>(n), theta);
  }
  std::complex<double> decimated{};
  for (std::size_t n = 0; n * static_cast<std::size_t>(p) < a.size(); ++n) {
    decimated += a[n * p] * detail::unit_power<double>(static_cast<long>(n), theta);
  }
  return std::abs(full - decimated);
}

inline double decimation_check(const std::vector<double>& a, int p, double theta) {
  return decimation_check(std::vector<std::complex<double>>(a.begin(), a.end()), p, theta);
}

}  // namespace cotzeta
