#include "toric/potential.hpp"

#include <algorithm>
#include <cmath>

namespace toric {

SymplecticPotential::SymplecticPotential(DelzantPolytope polytope)
    : SymplecticPotential(std::move(polytope), Polynomial()) {}

SymplecticPotential::SymplecticPotential(DelzantPolytope polytope, Polynomial perturbation)
    : polytope_(std::move(polytope)), h_(std::move(perturbation)) {
  const Eigen::Index n = polytope_.dimension();
  if (h_.is_zero()) h_ = Polynomial(n);
  if (h_.variables() != n) throw Error(ErrorCode::BadParams, "perturbation has the wrong number of variables");
  const auto d = static_cast<Eigen::Index>(polytope_.forms().size());
  normals_.resize(d, n);
  offsets_.resize(d);
  norms_.resize(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const auto& f = polytope_.forms()[static_cast<std::size_t>(k)];
    normals_.row(k) = f.normal().cast<long double>().transpose();
    offsets_(k) = f.offset().convert_to<long double>();
    norms_(k) = normals_.row(k).norm();
  }
}

SymplecticPotential transform(const SymplecticPotential& pot, const UnimodularMap& map) {
  const Polynomial h = pot.perturbation().compose_affine(to_rational(map.inverse_matrix()), map.translation());
  return SymplecticPotential(transform(pot.polytope(), map), h);
}

SymplecticPotential normalized_potential(const SymplecticPotential& pot, const Normalization& norm) {
  const Polynomial h =
      pot.perturbation().compose_affine(to_rational(norm.map.inverse_matrix()), norm.map.translation());
  return SymplecticPotential(norm.polytope, h);
}

DetFactorizationReport det_factorization_check(const SymplecticPotential& pot, std::span<const Vec<double>> samples,
                                               double max_ratio) {
  DetFactorizationReport report;
  report.max_ratio = max_ratio;
  if (samples.empty()) return report;
  bool ok = true;
  for (const auto& x : samples) {
    const auto mj = metric_jet(pot, x);
    const double delta = 1.0 / (mj.determinant * pot.distances(x).prod());
    ok = ok && std::isfinite(delta) && delta > 0;
    report.delta.push_back(delta);
  }
  const auto [lo, hi] = std::minmax_element(report.delta.begin(), report.delta.end());
  report.min = *lo;
  report.max = *hi;
  report.ratio = report.max / report.min;
  report.passes = ok && report.ratio <= max_ratio;
  return report;
}

std::vector<double> RaySchedule::values() const {
  std::vector<double> t;
  for (int m = 0; m < steps; ++m) t.push_back(std::ldexp(t0, -m));
  return t;
}

namespace {

double loglog_slope(const std::vector<double>& t, const std::vector<double>& v) {
  const auto n = static_cast<double>(t.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double lx = std::log(t[i]);
    const double ly = std::log(v[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

VanishingProbe vertex_vanishing_probe(const SymplecticPotential& pot, const RationalVector& vertex,
                                      std::span<const Vec<double>> rays, const RaySchedule& schedule,
                                      double tolerance, double min_slope) {
  const auto& p = pot.polytope();
  const auto idx = p.find_vertex(vertex);
  if (idx == DelzantPolytope::npos || !check_delzant(p).vertices[idx].passes)
    throw Error(ErrorCode::NotDelzantVertex, "probe origin must be a Delzant vertex");
  if (schedule.steps < 2) throw Error(ErrorCode::BadParams, "probe needs at least two parameters");

  const Vec<double> origin = rational_cast<double>(vertex);
  VanishingProbe probe;
  probe.tolerance = tolerance;
  probe.min_slope = min_slope;
  probe.passes = !rays.empty();
  for (const auto& d : rays) {
    VanishingProbe::Ray ray;
    ray.direction = d;
    ray.t = schedule.values();
    for (double t : ray.t) {
      const Vec<double> x = origin + t * d;
      ray.norm.push_back(metric_jet(pot, x).inverse.cwiseAbs().maxCoeff());
    }
    ray.decreasing = true;
    for (std::size_t m = 1; m < ray.norm.size(); ++m) ray.decreasing = ray.decreasing && ray.norm[m] < ray.norm[m - 1];
    ray.slope = loglog_slope(ray.t, ray.norm);
    ray.passes = ray.decreasing && ray.norm.back() <= tolerance && ray.slope >= min_slope;
    probe.passes = probe.passes && ray.passes;
    probe.rays.push_back(std::move(ray));
  }
  return probe;
}

std::vector<Vec<double>> interior_rays(const DelzantPolytope& p, std::size_t vertex_index, int count) {
  const auto& v = p.vertices().at(vertex_index);
  const auto m = v.edge_generators.size();
  std::vector<Vec<double>> rays;
  for (int r = 0; r < count; ++r) {
    // r = 0 is the barycentric direction; later rays lean towards one edge.
    Vec<double> w = Vec<double>::Ones(static_cast<Eigen::Index>(m));
    if (r > 0) w(static_cast<Eigen::Index>((r - 1) % m)) += 1.0 + (r - 1) / static_cast<double>(m);
    w /= w.sum();
    Vec<double> d = Vec<double>::Zero(p.dimension());
    for (std::size_t e = 0; e < m; ++e) d += w(static_cast<Eigen::Index>(e)) * v.edge_generators[e].cast<double>();
    rays.push_back(std::move(d));
  }
  return rays;
}

CofactorGrowth cofactor_growth_check(const SymplecticPotential& normalized, std::span<const Vec<double>> rays,
                                     const RaySchedule& schedule, double tolerance) {
  const auto& p = normalized.polytope();
  const Eigen::Index n = p.dimension();
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& f = p.forms()[static_cast<std::size_t>(i)];
    if (f.offset() != 0 || f.normal() != IntVector::Unit(n, i))
      throw Error(ErrorCode::NotNormalized, "first n forms must be the coordinate halfspaces x_i >= 0");
  }

  CofactorGrowth report;
  report.tolerance = tolerance;
  report.passes = !rays.empty();
  for (const auto& d : rays) {
    CofactorGrowth::Ray ray;
    ray.direction = d;
    ray.t = schedule.values();
    for (double t : ray.t) {
      const Vec<double> x = t * d;
      const auto mj = metric_jet(normalized, x);
      Mat<double> prod = mj.cofactor * x.prod();
      ray.max_abs.push_back(prod.cwiseAbs().maxCoeff());
      ray.products.push_back(std::move(prod));
    }
    // Monotone over the tail of the schedule.
    ray.monotone = true;
    for (std::size_t m = ray.max_abs.size() / 2 + 1; m < ray.max_abs.size(); ++m)
      ray.monotone = ray.monotone && ray.max_abs[m] <= ray.max_abs[m - 1];
    ray.passes = ray.monotone && ray.max_abs.back() <= tolerance;
    report.passes = report.passes && ray.passes;
    report.rays.push_back(std::move(ray));
  }
  return report;
}

}  // namespace toric
