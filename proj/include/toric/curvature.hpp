#pragma once

// Scalar curvature of a toric metric in moment coordinates,
//
//   s = - sum_{j,k} d_j d_k (G^{-1})_{jk},
//
// plus the affinity tests used to recognize extremal metrics and the
// soliton preserved quantity s + |grad f|^2 + 2 f.

#include <span>
#include <vector>

#include "toric/potential.hpp"
#include "toric/sampling.hpp"

namespace toric {

/// Analytic route: d_j G^{-1} = -G^{-1} (d_j G) G^{-1} differentiated once more,
/// using the third and fourth derivatives of the potential.
template <typename Scalar>
Scalar scalar_curvature(const SymplecticPotential& pot, const Vec<Scalar>& x) {
  const MetricJet<Scalar> mj = metric_jet(pot, x, true);
  const Eigen::Index n = x.size();
  const Mat<Scalar>& inv = mj.inverse;
  std::vector<Mat<Scalar>> p(static_cast<std::size_t>(n));  // G^{-1} d_j G
  for (Eigen::Index j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = inv * mj.d_metric[static_cast<std::size_t>(j)];

  Scalar total(0);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& pj = p[static_cast<std::size_t>(j)];
      const auto& pk = p[static_cast<std::size_t>(k)];
      const auto& dd = mj.dd_metric[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      // (d_k d_j G^{-1})_{jk}
      const Scalar entry = (pk * pj * inv)(j, k) + (pj * pk * inv)(j, k) - (inv * dd * inv)(j, k);
      total += entry;
    }
  return -total;
}

/// Finite-difference route: second differences of the entries of G^{-1} with
/// one Richardson extrapolation step (h and h/2). Needs the stencil to stay
/// inside the polytope.
template <typename Scalar>
Scalar scalar_curvature_fd(const SymplecticPotential& pot, const Vec<Scalar>& x, Scalar step) {
  const Eigen::Index n = x.size();
  if (!(step > Scalar(0))) throw Error(ErrorCode::PreconditionViolated, "finite-difference step must be positive");
  if (pot.boundary_distance(x) <= Scalar(2) * step)
    throw Error(ErrorCode::PreconditionViolated, "finite-difference stencil leaves the polytope");

  auto inv_at = [&](const Vec<Scalar>& y) { return metric_jet(pot, y).inverse; };
  auto second_sum = [&](Scalar h) {
    const Mat<Scalar> center = inv_at(x);
    Scalar acc(0);
    for (Eigen::Index j = 0; j < n; ++j) {
      Vec<Scalar> ej = Vec<Scalar>::Unit(n, j) * h;
      acc += (inv_at(x + ej)(j, j) - Scalar(2) * center(j, j) + inv_at(x - ej)(j, j)) / (h * h);
      for (Eigen::Index k = j + 1; k < n; ++k) {
        Vec<Scalar> ek = Vec<Scalar>::Unit(n, k) * h;
        const Scalar mixed = (inv_at(x + ej + ek)(j, k) - inv_at(x + ej - ek)(j, k) - inv_at(x - ej + ek)(j, k) +
                              inv_at(x - ej - ek)(j, k)) /
                             (Scalar(4) * h * h);
        acc += Scalar(2) * mixed;
      }
    }
    return acc;
  };
  const Scalar coarse = second_sum(step);
  const Scalar fine = second_sum(step / Scalar(2));
  return -(Scalar(4) * fine - coarse) / Scalar(3);
}

/// A scalar function on the interior of the polytope evaluated by one of the
/// two curvature routes.
class ScalarField {
 public:
  enum class Method { Analytic, FiniteDifference };

  ScalarField(const SymplecticPotential& pot, Method method, double step = 1e-3)
      : pot_(&pot), method_(method), step_(step) {}

  double operator()(const Vec<double>& x) const {
    return method_ == Method::Analytic ? scalar_curvature(*pot_, x) : scalar_curvature_fd(*pot_, x, step_);
  }
  Method method() const noexcept { return method_; }
  const SymplecticPotential& potential() const noexcept { return *pot_; }

 private:
  const SymplecticPotential* pot_;
  Method method_;
  double step_;
};

struct Sample {
  Vec<double> x;
  double value = 0;
};

struct AffineFit {
  double constant = 0;
  Vec<double> gradient;
  double max_residual = 0;
  std::size_t samples = 0;

  double operator()(const Vec<double>& x) const { return constant + gradient.dot(x); }
};

/// Least-squares affine fit; max_residual is the largest absolute deviation.
AffineFit affine_fit(std::span<const Sample> samples);

struct ExtremalityReport {
  bool is_extremal = false;
  AffineFit fit;
  double range = 0;      // max s - min s over the samples
  double tolerance = 0;  // effective tolerance: tol * max(1, range)
  std::vector<Sample> samples;
};

/// Samples s and tests affinity: extremal iff max_residual <= tol * max(1, range(s)).
ExtremalityReport extremality_check(const SymplecticPotential& pot, std::span<const Vec<double>> points,
                                    double tol = 1e-6);
ExtremalityReport extremality_check(const SymplecticPotential& pot, const GridSpec& grid, double tol = 1e-6);

/// |grad f|^2 = a^T G^{-1}(x) a for f = <a, x>.
template <typename Scalar>
Scalar grad_length_squared(const Vec<Scalar>& a, const SymplecticPotential& pot, const Vec<Scalar>& x) {
  return a.dot(metric_jet(pot, x).inverse * a);
}

struct SolitonIdentityReport {
  double constant = 0;      // mean of s + |grad f|^2 + 2 f
  double max_residual = 0;  // max deviation from the mean
  std::vector<Sample> samples;
};

SolitonIdentityReport soliton_identity_residual(const SymplecticPotential& pot, const Vec<double>& a,
                                                std::span<const Vec<double>> points);

struct CrossValidationReport {
  std::vector<double> analytic;
  std::vector<double> finite_difference;
  std::vector<double> relative_error;  // |analytic - fd| / max(1, |analytic|)
  double max_relative_error = 0;
  double tolerance = 0;
  double step = 0;
  bool passes = false;
};

/// Compares both curvature routes. Every point must be at distance >= 10 * step
/// from the boundary.
CrossValidationReport fd_cross_validate(const SymplecticPotential& pot, std::span<const Vec<double>> points,
                                        double tol = 1e-5, double step = 1e-3);

}  // namespace toric
