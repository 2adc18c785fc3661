#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cotzeta {

enum class GridRefinement { Uniform, GeometricEndpoints };

/// Deterministic sampling plan for (0,1): n_points uniform on
/// [epsilon, 1-epsilon], optionally extended by geometrically halved points
/// epsilon 2^{-j} and 1 - epsilon 2^{-j} toward the endpoints.  Refinement
/// stops at ~1e-12 so margins stay resolvable above evaluation error.
struct GridSpec {
  int n_points = 10000;
  double epsilon = 1e-4;
  GridRefinement refinement = GridRefinement::GeometricEndpoints;
};

inline GridSpec default_grid() { return {}; }

inline void validate(const GridSpec& spec) {
  if (spec.n_points < 2) {
    throw std::invalid_argument("GridSpec: n_points must be >= 2");
  }
  if (!(spec.epsilon > 0.0 && spec.epsilon <= 0.5)) {
    throw std::invalid_argument("GridSpec: epsilon must lie in (0, 0.5]");
  }
}

inline std::vector<double> grid_points(const GridSpec& spec) {
  validate(spec);
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(spec.n_points) + 42);
  const double a = spec.epsilon;
  const double b = 1.0 - spec.epsilon;
  const double step = (b - a) / (spec.n_points - 1);
  for (int i = 0; i < spec.n_points; ++i) {
    pts.push_back(i + 1 == spec.n_points ? b : a + i * step);
  }
  if (spec.refinement == GridRefinement::GeometricEndpoints) {
    const int depth =
        std::max(0, std::min(20, static_cast<int>(std::floor(std::log2(spec.epsilon / 1e-12)))));
    for (int j = 1; j <= depth; ++j) {
      const double off = spec.epsilon * std::ldexp(1.0, -j);
      if (off > 0.0 && off < 1.0) pts.push_back(off);
      if (1.0 - off > 0.0 && 1.0 - off < 1.0) pts.push_back(1.0 - off);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace cotzeta
