#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cotzeta/bounded.hpp"
#include "cotzeta/constants.hpp"
#include "cotzeta/cotangent.hpp"
#include "cotzeta/digamma.hpp"
#include "cotzeta/grid.hpp"
#include "cotzeta/zeta.hpp"

namespace cotzeta {

/// Per-point margins of an inequality sweep.  A margin is the signed gap
/// between the two sides; positive means satisfied.  The sweep passes only
/// where precision supports the claim: every margin must exceed its own
/// evaluation error bound.
struct MarginReport {
  std::string inequality_id;
  std::vector<double> points;
  std::vector<double> lhs;
  std::vector<double> rhs;
  std::vector<double> margins;
  std::vector<double> errs;
  double min_margin = 0.0;
  double argmin = 0.0;
  double eval_err_max = 0.0;
  bool pass = false;
};

namespace detail {

inline void finalize(MarginReport& r) {
  r.pass = !r.margins.empty();
  r.min_margin = std::numeric_limits<double>::infinity();
  r.eval_err_max = 0.0;
  for (std::size_t i = 0; i < r.margins.size(); ++i) {
    if (r.margins[i] < r.min_margin) {
      r.min_margin = r.margins[i];
      r.argmin = r.points[i];
    }
    r.eval_err_max = std::max(r.eval_err_max, r.errs[i]);
    if (!(r.margins[i] > r.errs[i])) r.pass = false;
  }
}

// log(1 - x + e^{-gamma}), the decreasing envelope above psi(1-x)+1/(1-x).
inline BoundedValue envelope_log_bound(double x) {
  const BoundedValue one_minus_x{1.0 - x, kEps * std::abs(1.0 - x)};
  return log(one_minus_x + constants().exp_neg_gamma);
}

// psi(1-x) + 1/(1-x) rewritten through the recurrence as psi(2-x); the
// pole cancellation is exact, so the form is stable up to both endpoints.
inline BoundedValue psi_side(double x) { return digamma(2.0 - x); }

inline BoundedValue linear_squeeze(double x) {
  return shift(scale(constants().b, x), 0.5);
}

}  // namespace detail

/// zeta(x) - psi(x) - pi cot(pi x), evaluated in the reduced form
/// zeta(x) - psi(1-x) = Z(x) - psi(2-x), which is free of the cot/psi pole
/// cancellation near the endpoints.
inline BoundedValue theorem_margin(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("theorem_margin: x must lie in (0,1)");
  }
  return regularized_zeta(x) - detail::psi_side(x);
}

/// Continuous extension of the margin to [0,1]: gamma - 1/2 at 0, 2 gamma at 1.
inline double theorem_margin_left_limit() { return constants().b.value; }
inline double theorem_margin_right_limit() { return 2.0 * constants().gamma.value; }

/// Margin sweep for pi cot(pi x) < zeta(x) - psi(x) over a grid.
/// lhs/rhs columns carry the naively assembled sides for display; the
/// margin column is the stable reduced form.
inline MarginReport verify_theorem1(const GridSpec& grid) {
  MarginReport r;
  r.inequality_id = "theorem1";
  for (const double x : grid_points(grid)) {
    const BoundedValue m = theorem_margin(x);
    const double pc = constants().pi.value * cot_pi(x);
    r.points.push_back(x);
    r.lhs.push_back(zeta(x).value - digamma(x).value);
    r.rhs.push_back(pc);
    r.margins.push_back(m.value);
    r.errs.push_back(m.err);
  }
  detail::finalize(r);
  return r;
}

/// Two-sided logarithmic digamma bounds, valid for x > 0:
///   log(x + 1/2) - 1/x <= psi(x) <= log(x + e^{-gamma}) - 1/x.
inline std::pair<double, double> egp_bounds(double x) {
  if (!(x > 0.0)) throw std::domain_error("egp_bounds: x must be positive");
  return {std::log(x + 0.5) - 1.0 / x,
          std::log(x + constants().exp_neg_gamma.value) - 1.0 / x};
}

/// The upper envelope log(1 - x + e^{-gamma}) of psi(1-x) + 1/(1-x) on (0,1).
inline double corollary_bound(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("corollary_bound: x must lie in [0,1]");
  }
  return detail::envelope_log_bound(x).value;
}

/// The four quantities of the squeeze
///   psi(1-x) + 1/(1-x) < log(1-x+e^{-gamma}) <= b x + 1/2 <= zeta(x) + 1/(1-x).
struct SqueezeChain {
  double x = 0.0;
  BoundedValue psi_side;
  BoundedValue log_bound;
  BoundedValue linear_f;
  BoundedValue zeta_side;
};

inline SqueezeChain squeeze_chain(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("squeeze_chain: x must lie in (0,1)");
  }
  SqueezeChain c;
  c.x = x;
  c.psi_side = detail::psi_side(x);
  c.log_bound = detail::envelope_log_bound(x);
  c.linear_f = detail::linear_squeeze(x);
  c.zeta_side = regularized_zeta(x);
  return c;
}

enum class Monotone { ZIncreasing, LogBoundDecreasing };

/// Forward differences with the expected sign over a grid; row x is the
/// left point of each difference pair.
inline MarginReport monotonicity_check(Monotone which, const GridSpec& grid) {
  const std::vector<double> pts = grid_points(grid);
  if (pts.size() < 3) {
    throw std::invalid_argument("monotonicity_check: grid must have at least 3 points");
  }
  MarginReport r;
  r.inequality_id =
      which == Monotone::ZIncreasing ? "Z_increasing" : "log_bound_decreasing";
  const double sign = which == Monotone::ZIncreasing ? 1.0 : -1.0;
  BoundedValue prev = which == Monotone::ZIncreasing
                          ? regularized_zeta(pts[0])
                          : detail::envelope_log_bound(pts[0]);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const BoundedValue cur = which == Monotone::ZIncreasing
                                 ? regularized_zeta(pts[i])
                                 : detail::envelope_log_bound(pts[i]);
    const BoundedValue diff = cur - prev;
    r.points.push_back(pts[i - 1]);
    r.lhs.push_back(cur.value);
    r.rhs.push_back(prev.value);
    r.margins.push_back(sign * diff.value);
    r.errs.push_back(diff.err);
    prev = cur;
  }
  detail::finalize(r);
  return r;
}

struct CertificateInterval {
  double a = 0.0;
  double b = 0.0;
  double z_lower = 0.0;
  double log_upper = 0.0;
  double err = 0.0;
  bool certified = false;
};

/// Finite certificate of the theorem: on each subinterval [a,b] the
/// increasing Z and the decreasing log envelope are both tightest at a, so
/// the single comparison Z(a) - err > log(1-a+e^{-gamma}) + err certifies
/// the whole subinterval.  The strip (0, epsilon] is covered analytically
/// and [1-epsilon, 1) by the same one-point argument at 1-epsilon.
struct CertificateReport {
  double epsilon = 0.0;
  std::vector<CertificateInterval> subintervals;
  std::string analytic_edge_note;
  bool all_certified = false;
};

inline CertificateReport certify_theorem1(double epsilon, int n_subintervals) {
  if (!(epsilon > 0.0 && epsilon <= 0.05)) {
    throw std::invalid_argument("certify_theorem1: epsilon must lie in (0, 0.05]");
  }
  if (n_subintervals < 1) {
    throw std::invalid_argument("certify_theorem1: need at least one subinterval");
  }
  CertificateReport rep;
  rep.epsilon = epsilon;
  rep.all_certified = true;
  const double width = (1.0 - 2.0 * epsilon) / n_subintervals;
  auto check_at = [&](double a, double b) {
    CertificateInterval iv;
    iv.a = a;
    iv.b = b;
    const BoundedValue z = regularized_zeta(a);
    const BoundedValue lb = detail::envelope_log_bound(a);
    iv.z_lower = z.value;
    iv.log_upper = lb.value;
    iv.err = z.err + lb.err;
    iv.certified = z.value - z.err > lb.value + lb.err;
    rep.all_certified = rep.all_certified && iv.certified;
    rep.subintervals.push_back(iv);
  };
  for (int i = 0; i < n_subintervals; ++i) {
    const double a = epsilon + i * width;
    const double b = i + 1 == n_subintervals ? 1.0 - epsilon : epsilon + (i + 1) * width;
    check_at(a, b);
  }
  check_at(1.0 - epsilon, 1.0);  // right edge, gap only widens toward 1

  const BoundedValue edge = detail::envelope_log_bound(0.0);
  const bool edge_ok = edge.value + edge.err < 0.5;
  rep.all_certified = rep.all_certified && edge_ok;
  rep.analytic_edge_note =
      "on (0, eps]: log(1-x+e^-gamma) <= log(1+e^-gamma) = " +
      std::to_string(edge.value) + " < 1/2 = inf Z (Z strictly increasing with limit 1/2 at 0); " +
      std::string(edge_ok ? "holds" : "FAILS") + " beyond evaluation error";
  return rep;
}

/// Margins of the conjectured two-sided refinement
///   pi cot(pi x) + x < zeta(x) - psi(x) < pi cot(pi x) + b_bar x + b.
/// Returns (g(x) - x, (b_bar x + b) - g(x)) with g the reduced margin.
inline std::pair<double, double> conjecture_margins(double x) {
  const BoundedValue g = theorem_margin(x);
  const BoundedValue upper_line =
      scale(constants().b_bar, x) + constants().b;
  return {g.value - x, upper_line.value - g.value};
}

struct ConjectureScan {
  MarginReport lower;
  MarginReport upper;
  bool consistent = false;  // evidence-grade verdict; the statement is open
};

namespace detail {

// The refined tail margins must shrink monotonically toward each endpoint.
inline bool trends_to_zero(const MarginReport& r, std::size_t tail) {
  const std::size_t n = r.margins.size();
  if (n < 2 * tail) return true;
  for (std::size_t i = 1; i < tail; ++i) {
    if (!(r.margins[i - 1] < r.margins[i])) return false;          // left end
    if (!(r.margins[n - i] < r.margins[n - i - 1])) return false;  // right end
  }
  return true;
}

}  // namespace detail

/// Sweep both conjecture margins.  The upper margin vanishes in the limit at
/// both endpoints, so grids should refine geometrically there.
inline ConjectureScan scan_conjecture(const GridSpec& grid) {
  ConjectureScan scan;
  scan.lower.inequality_id = "conjecture_lower";
  scan.upper.inequality_id = "conjecture_upper";
  for (const double x : grid_points(grid)) {
    const BoundedValue g = theorem_margin(x);
    const BoundedValue lower = g - exact(x);
    const BoundedValue upper =
        scale(constants().b_bar, x) + constants().b - g;
    scan.lower.points.push_back(x);
    scan.lower.lhs.push_back(g.value);
    scan.lower.rhs.push_back(x);
    scan.lower.margins.push_back(lower.value);
    scan.lower.errs.push_back(lower.err);
    scan.upper.points.push_back(x);
    scan.upper.lhs.push_back(constants().b_bar.value * x + constants().b.value);
    scan.upper.rhs.push_back(g.value);
    scan.upper.margins.push_back(upper.value);
    scan.upper.errs.push_back(upper.err);
  }
  detail::finalize(scan.lower);
  detail::finalize(scan.upper);
  scan.consistent = scan.lower.pass && scan.upper.pass &&
                    detail::trends_to_zero(scan.upper, 5);
  return scan;
}

}  // namespace cotzeta
