#pragma once

#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// Triangulation by coning: each face is coned from its lexicographically
/// smallest vertex over its facets not containing that vertex, recursively.
/// Each simplex lists n + 1 vertex indices; the order is deterministic.
std::vector<std::vector<std::size_t>> triangulate(const DelzantPolytope& p);

Rational exact_volume(const DelzantPolytope& p);

/// Moments of the weight exp(<a, x>) over the polytope.
struct ExponentialMoments {
  double mass = 0;   // int e^{<a,x>} dx
  Vec<double> first;  // int x e^{<a,x>} dx
  Mat<double> second; // int x x^T e^{<a,x>} dx
  double error_estimate = 0;
};

struct QuadratureOptions {
  // Relative to max(1, mass); larger coarse/refined disagreement is an error.
  double tolerance = 1e-10;
};

/// Tensor Gauss-Legendre rule of order 20 on each simplex (collapsed
/// coordinates), evaluated on the unit cube and on its 2^n half-cubes; the
/// refined value is returned and the difference is the error estimate.
ExponentialMoments exponential_moments(const DelzantPolytope& p, const Vec<double>& a,
                                       const QuadratureOptions& options = {});

}  // namespace toric
