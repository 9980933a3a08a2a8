#include "toric/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace toric {

namespace {

std::string describe(const RationalVector& x) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x(i).str();
  os << ')';
  return os.str();
}

}  // namespace

FanoPolytope fano_normalize(const DelzantPolytope& p) {
  const Eigen::Index n = p.dimension();
  std::vector<AffineForm> forms;
  for (const auto& f : p.forms()) forms.emplace_back(f.normal(), Rational(-1));

  std::vector<VertexData> vertices;
  try {
    vertices = enumerate_vertices(n, forms);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotFano, std::string("anticanonical polytope is degenerate: ") + e.what());
  }

  std::vector<std::vector<std::size_t>> expected;
  for (const auto& v : p.vertices()) expected.push_back(v.incident_facets);
  std::sort(expected.begin(), expected.end());

  for (const auto& v : vertices) {
    if (static_cast<Eigen::Index>(v.incident_facets.size()) != n)
      throw Error(ErrorCode::NotFano, "anticanonical vertex " + describe(v.coordinates) + " lies on " +
                                          std::to_string(v.incident_facets.size()) + " facets");
    if (!std::binary_search(expected.begin(), expected.end(), v.incident_facets))
      throw Error(ErrorCode::NotFano, "anticanonical vertex " + describe(v.coordinates) + " has new incidence");
  }
  if (vertices.size() != expected.size())
    throw Error(ErrorCode::NotFano, "anticanonical polytope has " + std::to_string(vertices.size()) +
                                        " vertices instead of " + std::to_string(expected.size()));

  DelzantPolytope fano = [&] {
    try {
      return DelzantPolytope::from_forms(n, std::move(forms));
    } catch (const Error& e) {
      throw Error(ErrorCode::NotFano, e.what());
    }
  }();
  const auto report = check_delzant(fano);
  for (const auto& r : report.vertices)
    if (!r.passes)
      throw Error(ErrorCode::NotFano,
                  "anticanonical vertex " + describe(fano.vertices()[r.index].coordinates) + " is not Delzant");
  return FanoPolytope(std::move(fano));
}

ExponentialMoments polytope_integral(const FanoPolytope& fp, const Vec<double>& a, const QuadratureOptions& options) {
  return exponential_moments(fp.polytope(), a, options);
}

SolitonData soliton_vector(const FanoPolytope& fp, const SolitonOptions& options) {
  const Eigen::Index n = fp.polytope().dimension();
  SolitonData out;
  out.a = Vec<double>::Zero(n);
  ExponentialMoments m = polytope_integral(fp, out.a, options.quadrature);
  for (int it = 0; it < options.max_iterations; ++it) {
    out.gradient_residual = m.first.norm();
    out.iterations = it;
    if (out.gradient_residual <= options.tolerance) return out;

    const Vec<double> step = m.second.llt().solve(-m.first);
    const double slope = m.first.dot(step);
    double scale = 1.0;
    ExponentialMoments trial;
    while (true) {
      trial = polytope_integral(fp, out.a + scale * step, options.quadrature);
      if (trial.mass <= m.mass + 1e-4 * scale * slope || scale < 1e-12) break;
      scale *= 0.5;
    }
    out.a += scale * step;
    m = std::move(trial);
  }
  out.gradient_residual = m.first.norm();
  out.iterations = options.max_iterations;
  if (out.gradient_residual <= options.tolerance) return out;
  throw Error(ErrorCode::MaxIterations, "Newton iteration did not reach the gradient tolerance",
              out.gradient_residual);
}

const char* to_string(Conclusion c) noexcept {
  switch (c) {
    case Conclusion::Einstein: return "Einstein";
    case Conclusion::HypothesisFails: return "HypothesisFails";
    case Conclusion::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

TheoremVerdict replay_theorem(const DelzantPolytope& p, std::span<const Sample> q_samples, double relative_tol) {
  TheoremVerdict v;
  v.dimension = p.dimension();
  v.relative_tolerance = relative_tol;
  if (q_samples.empty()) throw Error(ErrorCode::DegenerateSampleSet, "no samples of |grad f|^2");

  v.q_min = std::numeric_limits<double>::infinity();
  v.q_max = -v.q_min;
  for (const auto& s : q_samples) {
    v.q_min = std::min(v.q_min, s.value);
    v.q_max = std::max(v.q_max, s.value);
  }
  const double range = v.q_max - v.q_min;
  v.affinity_tolerance = relative_tol * range;
  v.vertex_tolerance = relative_tol * std::max(1.0, range);

  // |grad f|^2 must be affine for an extremal soliton.
  v.fit = affine_fit(q_samples);
  v.certificates.q_affine = v.fit.max_residual <= v.affinity_tolerance;

  // G^{-1} vanishes at the vertices, so the affine extension must too.
  v.certificates.vertices_vanish = true;
  std::vector<RationalVector> coords;
  for (const auto& vert : p.vertices()) {
    const double value = v.fit(rational_cast<double>(vert.coordinates));
    v.vertex_values.push_back(value);
    v.certificates.vertices_vanish = v.certificates.vertices_vanish && std::abs(value) <= v.vertex_tolerance;
    coords.push_back(vert.coordinates);
  }

  // Vertices of a Delzant polytope lie on no common affine hyperplane.
  v.rank = affine_span_rank(coords);
  v.certificates.vertices_span = v.rank == v.dimension;

  if (!v.certificates.q_affine) {
    v.certificates.vertices_vanish = false;
    v.conclusion = Conclusion::HypothesisFails;
    v.reason = "|grad f|^2 is not affine on the sample set";
    return v;
  }

  const double fit_norm = std::abs(v.fit.constant) + v.fit.gradient.norm();
  v.certificates.fit_bound = static_cast<double>(v.dimension) * v.vertex_tolerance * (1.0 + fit_norm);
  v.certificates.fit_vanishes =
      v.certificates.vertices_vanish && v.certificates.vertices_span && v.q_max <= v.certificates.fit_bound;

  if (!v.certificates.vertices_vanish) {
    v.conclusion = Conclusion::Inconclusive;
    v.reason = "affine fit does not vanish at every vertex";
  } else if (!v.certificates.vertices_span) {
    v.conclusion = Conclusion::Inconclusive;
    v.reason = "vertices lie on a common affine hyperplane";
  } else if (!v.certificates.fit_vanishes) {
    v.conclusion = Conclusion::Inconclusive;
    v.reason = "sampled |grad f|^2 exceeds what a vanishing affine function allows";
  } else {
    v.conclusion = Conclusion::Einstein;
    v.reason = "affine |grad f|^2 vanishing on affinely spanning vertices is identically zero";
  }
  return v;
}

TheoremVerdict verify_theorem(const SymplecticPotential& pot, const Vec<double>& a,
                              std::span<const Vec<double>> points, double relative_tol) {
  if (a.size() != pot.dimension()) throw Error(ErrorCode::BadParams, "soliton vector dimension mismatch");
  std::vector<Sample> samples;
  for (const auto& x : points) samples.push_back({x, grad_length_squared(a, pot, x)});
  TheoremVerdict v = replay_theorem(pot.polytope(), samples, relative_tol);

  // q next to each vertex, along the barycentric edge direction.
  const auto& p = pot.polytope();
  v.vertex_probe_t = std::ldexp(1e-2, -20);
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (static_cast<Eigen::Index>(p.vertices()[i].edge_generators.size()) != p.dimension()) {
      v.vertex_limits.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const Vec<double> x = rational_cast<double>(p.vertices()[i].coordinates) +
                          v.vertex_probe_t * interior_rays(p, i, 1).front();
    v.vertex_limits.push_back(grad_length_squared(a, pot, x));
  }

  // q = 0 at an interior point forces a = 0 because G^{-1} is positive definite there.
  const Vec<double> c = centroid(p);
  const auto mj = metric_jet(pot, c);
  Eigen::SelfAdjointEigenSolver<Mat<double>> eig(mj.inverse, Eigen::EigenvaluesOnly);
  v.certificates.centroid_q = a.dot(mj.inverse * a);
  v.certificates.centroid_min_eigenvalue = eig.eigenvalues().minCoeff();
  v.certificates.soliton_norm_bound =
      std::sqrt(std::max(0.0, v.certificates.centroid_q) / v.certificates.centroid_min_eigenvalue);
  v.certificates.soliton_vanishes = v.certificates.centroid_q <= v.vertex_tolerance;

  if (v.conclusion == Conclusion::Einstein && !v.certificates.soliton_vanishes) {
    v.conclusion = Conclusion::Inconclusive;
    v.reason = "|grad f|^2 at the centroid is not zero although its affine fit vanishes";
  }
  return v;
}

TheoremVerdict verify_theorem(const SymplecticPotential& pot, const Vec<double>& a, const GridSpec& grid,
                              double relative_tol) {
  const auto points = interior_grid(pot.polytope(), grid);
  return verify_theorem(pot, a, points, relative_tol);
}

}  // namespace toric
