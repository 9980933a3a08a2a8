#pragma once

#include <cstdint>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// Uniform lattice over the bounding box of the polytope, shrunk by the
/// margin and filtered to points at distance >= margin from every facet.
/// The margin is a fraction of the polytope diameter.
struct GridSpec {
  int per_axis = 20;
  double margin = 1e-3;
};

double diameter(const DelzantPolytope& p);
Vec<double> centroid(const DelzantPolytope& p);  // vertex average
double boundary_distance(const DelzantPolytope& p, const Vec<double>& x);

std::vector<Vec<double>> interior_grid(const DelzantPolytope& p, const GridSpec& spec = {});

/// Rejection-sampled points at Euclidean distance >= min_distance from the
/// boundary. Deterministic for a given seed.
std::vector<Vec<double>> random_interior_points(const DelzantPolytope& p, std::size_t count, std::uint64_t seed,
                                                double min_distance);

}  // namespace toric
