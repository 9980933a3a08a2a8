#pragma once

// Anticanonical (Fano) normalization, the soliton vector as the minimizer of
// F(a) = int e^{<a,x>} dx, and the replay of the argument that an extremal
// soliton has a = 0.

#include <span>
#include <string>
#include <vector>

#include "toric/curvature.hpp"
#include "toric/quadrature.hpp"

namespace toric {

/// {x : <u_k, x> >= -1} built from the normals of a Delzant polytope; the
/// origin is interior with lambda_k(0) = 1 for every k.
class FanoPolytope {
 public:
  const DelzantPolytope& polytope() const noexcept { return polytope_; }

 private:
  explicit FanoPolytope(DelzantPolytope p) : polytope_(std::move(p)) {}
  friend FanoPolytope fano_normalize(const DelzantPolytope& p);

  DelzantPolytope polytope_;
};

/// Succeeds iff the anticanonical polytope is Delzant with the same
/// facet-incidence combinatorics as p; otherwise NotFano naming a vertex.
FanoPolytope fano_normalize(const DelzantPolytope& p);

ExponentialMoments polytope_integral(const FanoPolytope& fp, const Vec<double>& a,
                                     const QuadratureOptions& options = {});

struct SolitonOptions {
  double tolerance = 1e-10;  // on |int x e^{<a,x>} dx|
  int max_iterations = 100;
  QuadratureOptions quadrature;
};

struct SolitonData {
  Vec<double> a;
  double gradient_residual = 0;
  int iterations = 0;
};

/// Damped Newton on the strictly convex F(a); gradient int x e^{<a,x>},
/// Hessian int x x^T e^{<a,x>}. Starts at a = 0.
SolitonData soliton_vector(const FanoPolytope& fp, const SolitonOptions& options = {});

enum class Conclusion { Einstein, HypothesisFails, Inconclusive };
const char* to_string(Conclusion c) noexcept;

struct TheoremVerdict {
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string reason;

  Eigen::Index dimension = 0;
  AffineFit fit;  // affine fit of q(x) = |grad f|^2
  double q_min = 0;
  double q_max = 0;
  double relative_tolerance = 0;
  double affinity_tolerance = 0;  // relative * range(q)
  double vertex_tolerance = 0;    // relative * max(1, range(q))

  std::vector<double> vertex_values;  // fitted affine function at each vertex
  std::vector<double> vertex_limits;  // q sampled next to each vertex (potential route only)
  double vertex_probe_t = 0;
  Eigen::Index rank = 0;  // affine span rank of the vertices

  struct Certificates {
    bool q_affine = false;
    bool vertices_vanish = false;
    bool vertices_span = false;
    bool fit_vanishes = false;
    bool soliton_vanishes = false;
    double fit_bound = 0;  // n * vertex_tol * (1 + |fit|), the largest q compatible with Einstein
    double centroid_q = std::numeric_limits<double>::quiet_NaN();
    double centroid_min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    double soliton_norm_bound = std::numeric_limits<double>::quiet_NaN();
  } certificates;
};

/// Steps on sampled q: affine fit, vanishing at the vertices, vertex affine
/// rank n, hence the affine function is zero.
TheoremVerdict replay_theorem(const DelzantPolytope& p, std::span<const Sample> q_samples,
                              double relative_tol = 1e-6);

/// Full pipeline for f = <a, x> on a potential: samples q = a^T G^{-1} a,
/// replays the argument, and on success certifies a = 0 through positive
/// definiteness of G^{-1} at the centroid.
TheoremVerdict verify_theorem(const SymplecticPotential& pot, const Vec<double>& a,
                              std::span<const Vec<double>> points, double relative_tol = 1e-6);
TheoremVerdict verify_theorem(const SymplecticPotential& pot, const Vec<double>& a, const GridSpec& grid,
                              double relative_tol = 1e-6);

}  // namespace toric
