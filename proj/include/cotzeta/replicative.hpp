#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cotzeta/bernoulli.hpp"
#include "cotzeta/cotangent.hpp"
#include "cotzeta/errors.hpp"
#include "cotzeta/grid.hpp"

namespace cotzeta {

/// A candidate for the replicative functional equation
///   (1/p^w) sum_{k=0}^{p-1} f((x+k)/p) = f(x)  for all p in N.
struct KubertCandidate {
  std::string name;
  std::function<double(double)> eval;
  double weight = 0.0;
  bool singular_at_endpoints = false;
};

namespace detail {
inline constexpr double kSingularTol = 1e-12;

template <class Real>
Real neg_log_two_sin(Real x) {
  return -std::log(Real(2) * std::sin(std::numbers::pi_v<Real> * x));
}
}  // namespace detail

/// The cataloged pairs (f, weight): cot(pi x) at weight 1; restricted
/// Bernoulli polynomials B_n at weight 1-n (the multiplication formula);
/// and the s=1 polylog restrictions Re Li_1(e^{2 pi i x}) = -log(2 sin pi x)
/// and Im Li_1 = pi B_1(1-x), both weight 0.
inline const std::vector<KubertCandidate>& kubert_catalog() {
  static const std::vector<KubertCandidate> catalog = {
      {"cot_pi", [](double x) { return cot_pi(x); }, 1.0, true},
      {"bernoulli_1", [](double x) { return bernoulli_poly(1, x); }, 0.0, false},
      {"bernoulli_2", [](double x) { return bernoulli_poly(2, x); }, -1.0, false},
      {"bernoulli_3", [](double x) { return bernoulli_poly(3, x); }, -2.0, false},
      {"neg_log_two_sin", [](double x) { return detail::neg_log_two_sin(x); }, 0.0, true},
  };
  return catalog;
}

/// |(1/p^w) sum_k f((x+k)/p) - f(x)|.  The evaluation points (x+k)/p land in
/// (0,1) automatically; declared singularities within kSingularTol of an
/// endpoint raise a singularity_error.
inline double replicative_residual(const KubertCandidate& c, int p, double x) {
  if (p < 1) throw std::domain_error("replicative_residual: p must be >= 1");
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("replicative_residual: x must lie in (0,1)");
  }
  auto guarded = [&](double y) {
    if (c.singular_at_endpoints &&
        (y < detail::kSingularTol || y > 1.0 - detail::kSingularTol)) {
      throw singularity_error("replicative_residual: evaluation at declared singularity of " +
                              c.name);
    }
    return c.eval(y);
  };
  double sum = 0.0;
  for (int k = 0; k < p; ++k) {
    sum += guarded((x + k) / p);
  }
  return std::abs(sum / std::pow(static_cast<double>(p), c.weight) - guarded(x));
}

/// Residual matrix over (multiplier, grid point) cells.  Singularity hits
/// are recorded per cell (NaN residual) and fail the verdict.
struct ReplicativeReport {
  std::string candidate;
  double weight = 0.0;
  std::vector<int> multipliers;
  std::vector<double> points;
  std::vector<std::vector<double>> residuals;  // residuals[p index][grid index]
  std::vector<std::pair<int, double>> failures;  // (p, x) of singular cells
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline ReplicativeReport replicative_test(const KubertCandidate& c,
                                          const std::vector<int>& multipliers,
                                          const GridSpec& grid, double tolerance) {
  if (multipliers.empty()) {
    throw std::invalid_argument("replicative_test: multipliers must be nonempty");
  }
  ReplicativeReport rep;
  rep.candidate = c.name;
  rep.weight = c.weight;
  rep.multipliers = multipliers;
  rep.points = grid_points(grid);
  rep.tolerance = tolerance;
  for (const int p : multipliers) {
    std::vector<double> row;
    row.reserve(rep.points.size());
    for (const double x : rep.points) {
      try {
        const double res = replicative_residual(c, p, x);
        rep.max_residual = std::max(rep.max_residual, res);
        row.push_back(res);
      } catch (const singularity_error&) {
        rep.failures.emplace_back(p, x);
        row.push_back(std::numeric_limits<double>::quiet_NaN());
      }
    }
    rep.residuals.push_back(std::move(row));
  }
  rep.pass = rep.failures.empty() && rep.max_residual <= tolerance;
  return rep;
}

}  // namespace cotzeta
