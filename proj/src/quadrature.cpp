#include "toric/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include <boost/math/quadrature/gauss.hpp>

#include "toric/exact.hpp"

namespace toric {

namespace {

constexpr int kGaussOrder = 20;

void cone_face(const DelzantPolytope& p, const std::vector<std::size_t>& face, Eigen::Index dim,
               std::vector<std::size_t>& prefix, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t apex = face.front();  // vertices are stored in lexicographic order
  if (dim == 0) {
    prefix.push_back(apex);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  std::set<std::vector<std::size_t>> facets;
  for (std::size_t k = 0; k < p.forms().size(); ++k) {
    std::vector<std::size_t> sub;
    for (auto v : face) {
      const auto& inc = p.vertices()[v].incident_facets;
      if (std::binary_search(inc.begin(), inc.end(), k)) sub.push_back(v);
    }
    if (sub.empty() || sub.size() == face.size()) continue;
    if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
    std::vector<RationalVector> pts;
    for (auto v : sub) pts.push_back(p.vertices()[v].coordinates);
    if (affine_span_rank(pts) == dim - 1) facets.insert(std::move(sub));
  }
  prefix.push_back(apex);
  for (const auto& f : facets) cone_face(p, f, dim - 1, prefix, out);
  prefix.pop_back();
}

struct Rule {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;
};

const Rule& gauss_rule() {
  static const Rule rule = [] {
    using G = boost::math::quadrature::gauss<double, kGaussOrder>;
    Rule r;
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
      r.nodes.push_back(0.5 * (1.0 + x[i]));
      r.weights.push_back(0.5 * w[i]);
      if (x[i] != 0.0) {
        r.nodes.push_back(0.5 * (1.0 - x[i]));
        r.weights.push_back(0.5 * w[i]);
      }
    }
    return r;
  }();
  return rule;
}

struct Accumulator {
  double mass = 0;
  Vec<double> first;
  Mat<double> second;
};

// Integrates over the simplex V0..Vn via the collapsed map from the cube
// [lo, lo + width]^n (componentwise), accumulating into acc.
void integrate_simplex(const Mat<double>& verts, const Vec<double>& a, const Vec<double>& lo, double width,
                       Accumulator& acc) {
  const Eigen::Index n = verts.rows();
  const Rule& rule = gauss_rule();
  const auto q = rule.nodes.size();
  Mat<double> edges(n, n);
  for (Eigen::Index i = 0; i < n; ++i) edges.col(i) = verts.col(i + 1) - verts.col(0);
  const double volume_scale = std::abs(edges.determinant());

  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  Vec<double> x(n);
  while (true) {
    double weight = volume_scale;
    double remaining = 1.0;
    x = verts.col(0);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto k = idx[static_cast<std::size_t>(i)];
      const double xi = lo(i) + width * rule.nodes[k];
      weight *= width * rule.weights[k];
      const double lambda = remaining * xi;
      x += lambda * edges.col(i);
      // Jacobian of the collapsed map: prod_j (1 - xi_j)^{n - 1 - j}.
      if (i + 1 < n) weight *= std::pow(1.0 - xi, static_cast<double>(n - 1 - i));
      remaining *= (1.0 - xi);
    }
    const double w = weight * std::exp(a.dot(x));
    acc.mass += w;
    acc.first += w * x;
    acc.second.noalias() += w * x * x.transpose();

    Eigen::Index i = 0;
    while (i < n && ++idx[static_cast<std::size_t>(i)] == q) idx[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
}

Accumulator empty_accumulator(Eigen::Index n) {
  return {0.0, Vec<double>::Zero(n), Mat<double>::Zero(n, n)};
}

}  // namespace

std::vector<std::vector<std::size_t>> triangulate(const DelzantPolytope& p) {
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> prefix;
  cone_face(p, all, p.dimension(), prefix, out);
  return out;
}

Rational exact_volume(const DelzantPolytope& p) {
  const Eigen::Index n = p.dimension();
  Rational factorial = 1;
  for (Eigen::Index i = 2; i <= n; ++i) factorial *= Rational(static_cast<long>(i));
  Rational total = 0;
  for (const auto& s : triangulate(p)) {
    RationalMatrix e(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      e.col(i) = p.vertices()[s[static_cast<std::size_t>(i) + 1]].coordinates - p.vertices()[s[0]].coordinates;
    const Rational det = exact_determinant(e);
    total += (det < 0 ? Rational(-det) : det);
  }
  return total / factorial;
}

ExponentialMoments exponential_moments(const DelzantPolytope& p, const Vec<double>& a,
                                       const QuadratureOptions& options) {
  const Eigen::Index n = p.dimension();
  if (a.size() != n) throw Error(ErrorCode::BadParams, "weight vector dimension mismatch");
  Accumulator coarse = empty_accumulator(n);
  Accumulator fine = empty_accumulator(n);
  const auto simplices = triangulate(p);
  for (const auto& s : simplices) {
    Mat<double> verts(n, n + 1);
    for (Eigen::Index i = 0; i <= n; ++i)
      verts.col(i) = rational_cast<double>(p.vertices()[s[static_cast<std::size_t>(i)]].coordinates);
    integrate_simplex(verts, a, Vec<double>::Zero(n), 1.0, coarse);
    for (int corner = 0; corner < (1 << n); ++corner) {
      Vec<double> lo(n);
      for (Eigen::Index i = 0; i < n; ++i) lo(i) = ((corner >> i) & 1) ? 0.5 : 0.0;
      integrate_simplex(verts, a, lo, 0.5, fine);
    }
  }
  ExponentialMoments m;
  m.mass = fine.mass;
  m.first = fine.first;
  m.second = fine.second;
  m.error_estimate = std::max({std::abs(fine.mass - coarse.mass), (fine.first - coarse.first).cwiseAbs().maxCoeff(),
                               (fine.second - coarse.second).cwiseAbs().maxCoeff()});
  if (!(m.error_estimate <= options.tolerance * std::max(1.0, std::abs(m.mass))))
    throw Error(ErrorCode::QuadratureNotConverged, "coarse and refined quadrature disagree", m.error_estimate);
  return m;
}

}  // namespace toric
