#include "toric/sampling.hpp"

#include <random>

namespace toric {

double diameter(const DelzantPolytope& p) {
  double d = 0;
  const auto& vs = p.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      d = std::max(d, (rational_cast<double>(vs[i].coordinates) - rational_cast<double>(vs[j].coordinates)).norm());
  return d;
}

Vec<double> centroid(const DelzantPolytope& p) { return rational_cast<double>(p.vertex_centroid()); }

double boundary_distance(const DelzantPolytope& p, const Vec<double>& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : p.forms()) {
    const Vec<double> u = f.normal().cast<double>();
    best = std::min(best, f.evaluate(x) / u.norm());
  }
  return best;
}

namespace {

void bounding_box(const DelzantPolytope& p, Vec<double>& lo, Vec<double>& hi) {
  lo = Vec<double>::Constant(p.dimension(), std::numeric_limits<double>::infinity());
  hi = -lo;
  for (const auto& v : p.vertices()) {
    const Vec<double> x = rational_cast<double>(v.coordinates);
    lo = lo.cwiseMin(x);
    hi = hi.cwiseMax(x);
  }
}

}  // namespace

std::vector<Vec<double>> interior_grid(const DelzantPolytope& p, const GridSpec& spec) {
  if (spec.per_axis < 3) throw Error(ErrorCode::BadParams, "grid resolution must be at least 3 per axis");
  if (!(spec.margin > 0)) throw Error(ErrorCode::BadParams, "grid margin must be positive");
  const Eigen::Index n = p.dimension();
  const double margin = spec.margin * diameter(p);
  Vec<double> lo, hi;
  bounding_box(p, lo, hi);
  lo.array() += margin;
  hi.array() -= margin;

  std::vector<Vec<double>> points;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  const int m = spec.per_axis;
  while (true) {
    Vec<double> x(n);
    for (Eigen::Index i = 0; i < n; ++i)
      x(i) = lo(i) + (hi(i) - lo(i)) * idx[static_cast<std::size_t>(i)] / static_cast<double>(m - 1);
    if (boundary_distance(p, x) >= margin * (1 - 1e-9)) points.push_back(std::move(x));
    Eigen::Index i = 0;
    while (i < n && ++idx[static_cast<std::size_t>(i)] == m) idx[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return points;
}

std::vector<Vec<double>> random_interior_points(const DelzantPolytope& p, std::size_t count, std::uint64_t seed,
                                                double min_distance) {
  Vec<double> lo, hi;
  bounding_box(p, lo, hi);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vec<double>> points;
  std::size_t attempts = 0;
  while (points.size() < count) {
    if (++attempts > 1000 * (count + 1))
      throw Error(ErrorCode::BadParams, "interior margin leaves no room for random points");
    Vec<double> x(p.dimension());
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = lo(i) + (hi(i) - lo(i)) * unit(rng);
    if (boundary_distance(p, x) >= min_distance) points.push_back(std::move(x));
  }
  return points;
}

}  // namespace toric
