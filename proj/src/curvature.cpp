#include "toric/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace toric {

AffineFit affine_fit(std::span<const Sample> samples) {
  if (samples.empty()) throw Error(ErrorCode::DegenerateSampleSet, "no samples");
  const Eigen::Index n = samples.front().x.size();
  const auto m = static_cast<Eigen::Index>(samples.size());
  if (m < n + 1) throw Error(ErrorCode::DegenerateSampleSet, "need at least n + 1 samples");

  Vec<double> mean = Vec<double>::Zero(n);
  for (const auto& s : samples) mean += s.x;
  mean /= static_cast<double>(m);

  Mat<double> design(m, n + 1);
  Vec<double> rhs(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    const auto& s = samples[static_cast<std::size_t>(r)];
    design(r, 0) = 1.0;
    design.row(r).tail(n) = (s.x - mean).transpose();
    rhs(r) = s.value;
  }
  Eigen::ColPivHouseholderQR<Mat<double>> qr(design);
  if (qr.rank() < n + 1) throw Error(ErrorCode::DegenerateSampleSet, "samples do not affinely span R^n");
  const Vec<double> coeff = qr.solve(rhs);

  AffineFit fit;
  fit.gradient = coeff.tail(n);
  fit.constant = coeff(0) - fit.gradient.dot(mean);
  fit.samples = samples.size();
  for (const auto& s : samples)
    fit.max_residual = std::max(fit.max_residual, std::abs(coeff(0) + fit.gradient.dot(s.x - mean) - s.value));
  return fit;
}

ExtremalityReport extremality_check(const SymplecticPotential& pot, std::span<const Vec<double>> points, double tol) {
  ExtremalityReport report;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& x : points) {
    const double s = scalar_curvature(pot, x);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
    report.samples.push_back({x, s});
  }
  report.fit = affine_fit(report.samples);
  report.range = hi - lo;
  report.tolerance = tol * std::max(1.0, report.range);
  report.is_extremal = report.fit.max_residual <= report.tolerance;
  return report;
}

ExtremalityReport extremality_check(const SymplecticPotential& pot, const GridSpec& grid, double tol) {
  const auto points = interior_grid(pot.polytope(), grid);
  return extremality_check(pot, points, tol);
}

SolitonIdentityReport soliton_identity_residual(const SymplecticPotential& pot, const Vec<double>& a,
                                                std::span<const Vec<double>> points) {
  if (a.size() != pot.dimension()) throw Error(ErrorCode::BadParams, "soliton vector dimension mismatch");
  SolitonIdentityReport report;
  if (points.empty()) return report;
  double sum = 0;
  for (const auto& x : points) {
    const auto mj = metric_jet(pot, x);
    const double value = scalar_curvature(pot, x) + a.dot(mj.inverse * a) + 2.0 * a.dot(x);
    sum += value;
    report.samples.push_back({x, value});
  }
  report.constant = sum / static_cast<double>(points.size());
  for (const auto& s : report.samples)
    report.max_residual = std::max(report.max_residual, std::abs(s.value - report.constant));
  return report;
}

CrossValidationReport fd_cross_validate(const SymplecticPotential& pot, std::span<const Vec<double>> points,
                                        double tol, double step) {
  CrossValidationReport report;
  report.tolerance = tol;
  report.step = step;
  for (const auto& x : points)
    if (!(pot.boundary_distance(x) >= 10.0 * step))
      throw Error(ErrorCode::PreconditionViolated, "point closer to the boundary than 10x the finite-difference step");
  for (const auto& x : points) {
    const double a = scalar_curvature(pot, x);
    const double f = scalar_curvature_fd(pot, x, step);
    const double err = std::abs(a - f) / std::max(1.0, std::abs(a));
    report.analytic.push_back(a);
    report.finite_difference.push_back(f);
    report.relative_error.push_back(err);
    report.max_relative_error = std::max(report.max_relative_error, err);
  }
  report.passes = !points.empty() && report.max_relative_error <= tol;
  return report;
}

}  // namespace toric
