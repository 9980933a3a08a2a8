#pragma once

// Symplectic (Abreu) potentials on the interior of a moment polytope and the
// Hessian metric they induce. With lambda_k the facet distance functions,
//
//   g(x) = 1/2 (sum_k lambda_k(x) log lambda_k(x) + h(x)),
//
// and the metric in moment coordinates is G = Hess(g).

#include <cmath>
#include <span>
#include <vector>

#include "toric/polynomial.hpp"
#include "toric/polytope.hpp"

namespace toric {

class SymplecticPotential {
 public:
  explicit SymplecticPotential(DelzantPolytope polytope);
  SymplecticPotential(DelzantPolytope polytope, Polynomial perturbation);

  const DelzantPolytope& polytope() const noexcept { return polytope_; }
  const Polynomial& perturbation() const noexcept { return h_; }
  Eigen::Index dimension() const noexcept { return polytope_.dimension(); }
  std::size_t facet_count() const noexcept { return polytope_.forms().size(); }

  template <typename Scalar>
  Mat<Scalar> normals() const {
    return normals_.template cast<Scalar>();
  }

  /// lambda_k(x) for every form.
  template <typename Scalar>
  Vec<Scalar> distances(const Vec<Scalar>& x) const {
    return normals_.template cast<Scalar>() * x - offsets_.template cast<Scalar>();
  }

  /// Euclidean distance from x to the nearest facet hyperplane (negative outside).
  template <typename Scalar>
  Scalar boundary_distance(const Vec<Scalar>& x) const {
    return (distances(x).array() / norms_.template cast<Scalar>().array()).minCoeff();
  }

  template <typename Scalar>
  bool contains_interior(const Vec<Scalar>& x) const {
    return x.size() == dimension() && (distances(x).array() > Scalar(0)).all();
  }

 private:
  DelzantPolytope polytope_;
  Polynomial h_;
  Mat<long double> normals_;
  Vec<long double> offsets_;
  Vec<long double> norms_;
};

/// Same potential expressed in the coordinates x' = A (x - t):
/// g'(x') = g(x), with h composed with the inverse map.
SymplecticPotential transform(const SymplecticPotential& pot, const UnimodularMap& map);

/// Potential carried along a vertex normalization (forms reordered as in it).
SymplecticPotential normalized_potential(const SymplecticPotential& pot, const Normalization& norm);

template <typename Scalar>
struct PotentialJet {
  Vec<Scalar> point;
  int order = 0;
  Scalar value{};
  Vec<Scalar> gradient;
  Mat<Scalar> hessian;
  std::vector<Mat<Scalar>> third;                // third[k](i, j) = d_i d_j d_k g
  std::vector<std::vector<Mat<Scalar>>> fourth;  // fourth[k][l](i, j) = d_i d_j d_k d_l g
};

template <typename Scalar>
PotentialJet<Scalar> potential_jet(const SymplecticPotential& pot, const Vec<Scalar>& x, int order) {
  using std::log;
  if (order < 0 || order > 4) throw Error(ErrorCode::BadParams, "jet order must be in 0..4");
  if (x.size() != pot.dimension()) throw Error(ErrorCode::BadParams, "point dimension mismatch");
  const Vec<Scalar> lambda = pot.distances(x);
  if (!(lambda.array() > Scalar(0)).all())
    throw Error(ErrorCode::OutsideDomain, "point is not in the open interior",
                static_cast<double>(lambda.minCoeff()));

  const Mat<Scalar> u = pot.normals<Scalar>();
  const Polynomial& h = pot.perturbation();
  const Eigen::Index n = x.size();
  const Scalar half(0.5);

  PotentialJet<Scalar> jet;
  jet.point = x;
  jet.order = order;
  jet.value = half * ((lambda.array() * lambda.array().log()).sum() + h(x));
  if (order < 1) return jet;

  // Derivatives of lambda log lambda along u: (log lambda + 1), 1/lambda,
  // -1/lambda^2, 2/lambda^3 times the matching tensor power of u.
  jet.gradient = Vec<Scalar>(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const int vars[] = {static_cast<int>(i)};
    jet.gradient(i) = half * (u.col(i).dot((lambda.array().log() + Scalar(1)).matrix()) + h.derivative<Scalar>(vars, x));
  }
  if (order < 2) return jet;

  const Vec<Scalar> inv1 = lambda.cwiseInverse();
  jet.hessian = Mat<Scalar>(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      const int vars[] = {static_cast<int>(i), static_cast<int>(j)};
      const Scalar v = half * ((u.col(i).array() * u.col(j).array() * inv1.array()).sum() + h.derivative<Scalar>(vars, x));
      jet.hessian(i, j) = v;
      jet.hessian(j, i) = v;
    }
  if (order < 3) return jet;

  const Vec<Scalar> inv2 = inv1.cwiseProduct(inv1);
  jet.third.assign(static_cast<std::size_t>(n), Mat<Scalar>(n, n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        const int vars[] = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
        jet.third[static_cast<std::size_t>(k)](i, j) =
            half * (-(u.col(i).array() * u.col(j).array() * u.col(k).array() * inv2.array()).sum() +
                    h.derivative<Scalar>(vars, x));
      }
  if (order < 4) return jet;

  const Vec<Scalar> inv3 = inv2.cwiseProduct(inv1);
  jet.fourth.assign(static_cast<std::size_t>(n), std::vector<Mat<Scalar>>(static_cast<std::size_t>(n), Mat<Scalar>(n, n)));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) {
          const int vars[] = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k), static_cast<int>(l)};
          jet.fourth[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)](i, j) =
              half * (Scalar(2) * (u.col(i).array() * u.col(j).array() * u.col(k).array() * u.col(l).array() *
                                   inv3.array())
                                      .sum() +
                      h.derivative<Scalar>(vars, x));
        }
  return jet;
}

/// Matrix of signed minors, computed directly from minors rather than from
/// the inverse.
template <typename Derived>
Mat<typename Derived::Scalar> cofactor_matrix(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  Mat<Scalar> cof(n, n);
  if (n == 1) {
    cof(0, 0) = Scalar(1);
    return cof;
  }
  Mat<Scalar> minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      cof(i, j) = ((i + j) % 2 == 0 ? Scalar(1) : Scalar(-1)) * minor.determinant();
    }
  return cof;
}

template <typename Scalar>
struct MetricJet {
  Vec<Scalar> point;
  Mat<Scalar> metric;   // G = Hess(g)
  Mat<Scalar> inverse;  // G^{-1}
  Scalar determinant{};
  Mat<Scalar> cofactor;
  std::vector<Mat<Scalar>> d_metric;                // d_metric[k] = d_k G
  std::vector<std::vector<Mat<Scalar>>> dd_metric;  // dd_metric[k][l] = d_k d_l G

  bool has_derivatives() const noexcept { return !d_metric.empty(); }
};

template <typename Scalar>
MetricJet<Scalar> metric_jet(const SymplecticPotential& pot, const Vec<Scalar>& x, bool with_derivatives = false) {
  PotentialJet<Scalar> jet = potential_jet(pot, x, with_derivatives ? 4 : 2);
  const Eigen::Index n = x.size();

  Eigen::LLT<Mat<Scalar>> llt(jet.hessian);
  if (llt.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<Mat<Scalar>> eig(jet.hessian, Eigen::EigenvaluesOnly);
    const Scalar lowest = eig.eigenvalues().minCoeff();
    throw Error(ErrorCode::NotPositiveDefinite, "Hessian of the potential is not positive definite",
                static_cast<double>(lowest));
  }

  MetricJet<Scalar> mj;
  mj.point = x;
  mj.metric = std::move(jet.hessian);
  Mat<Scalar> inv = llt.solve(Mat<Scalar>::Identity(n, n));
  mj.inverse = Scalar(0.5) * (inv + inv.transpose());
  const Vec<Scalar> diag = llt.matrixL().toDenseMatrix().diagonal();
  mj.determinant = diag.array().square().prod();
  mj.cofactor = cofactor_matrix(mj.metric);
  if (with_derivatives) {
    mj.d_metric = std::move(jet.third);
    mj.dd_metric = std::move(jet.fourth);
  }
  return mj;
}

struct DetFactorizationReport {
  std::vector<double> delta;  // 1 / (det G * prod_k lambda_k) per sample
  double min = 0;
  double max = 0;
  double ratio = 0;  // max / min
  double max_ratio = 0;
  bool passes = false;
};

/// Evaluates delta(x) = 1 / (det G(x) prod_k lambda_k(x)), which must stay
/// positive and bounded up to the boundary. Passes iff every delta is finite
/// and positive and max/min <= max_ratio.
DetFactorizationReport det_factorization_check(const SymplecticPotential& pot,
                                               std::span<const Vec<double>> samples,
                                               double max_ratio = 1e3);

/// Geometric parameter schedule t_m = t0 * 2^{-m}, m = 0..steps-1.
struct RaySchedule {
  double t0 = 1e-2;
  int steps = 15;

  std::vector<double> values() const;
};

struct VanishingProbe {
  struct Ray {
    Vec<double> direction;
    std::vector<double> t;
    std::vector<double> norm;  // max-abs entry of G^{-1}(vertex + t d)
    double slope = 0;          // least-squares slope of log norm against log t
    bool decreasing = false;
    bool passes = false;
  };
  std::vector<Ray> rays;
  double tolerance = 0;
  double min_slope = 0;
  bool passes = false;
};

/// Probes G^{-1} along rays entering the interior from a vertex.
VanishingProbe vertex_vanishing_probe(const SymplecticPotential& pot, const RationalVector& vertex,
                                      std::span<const Vec<double>> rays, const RaySchedule& schedule = {},
                                      double tolerance = 1e-4, double min_slope = 0.9);

/// Rays from a vertex into the interior: positive combinations of its edge
/// generators with weights summing to 1, so that vertex + t d is interior for
/// t in (0, 1).
std::vector<Vec<double>> interior_rays(const DelzantPolytope& p, std::size_t vertex_index, int count = 3);

struct CofactorGrowth {
  struct Ray {
    Vec<double> direction;
    std::vector<double> t;
    std::vector<Mat<double>> products;  // cof(G)_{ij}(x) * x_1 ... x_n
    std::vector<double> max_abs;
    bool monotone = false;
    bool passes = false;
  };
  std::vector<Ray> rays;
  double tolerance = 0;
  bool passes = false;
};

/// For a potential on a polytope normalized at the origin vertex (first n
/// forms are x_i >= 0), checks cof(G)_{ij}(x) x_1 ... x_n -> 0 along rays.
CofactorGrowth cofactor_growth_check(const SymplecticPotential& normalized, std::span<const Vec<double>> rays,
                                     const RaySchedule& schedule = {}, double tolerance = 1e-6);

}  // namespace toric
