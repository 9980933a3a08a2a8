#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "toric/exact.hpp"

namespace toric {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidForm: return "InvalidForm";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::LowerDimensional: return "LowerDimensional";
    case ErrorCode::RedundantForm: return "RedundantForm";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotDelzantVertex: return "NotDelzantVertex";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::DegenerateSampleSet: return "DegenerateSampleSet";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotFano: return "NotFano";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::MaxIterations: return "MaxIterations";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::int64_t>::max()) ||
      v < BigInt(std::numeric_limits<std::int64_t>::min()))
    throw Error(ErrorCode::BadParams, "integer entry overflows 64 bits");
  return v.convert_to<std::int64_t>();
}

std::vector<Rational> key_of(const RationalVector& x) { return {x.data(), x.data() + x.size()}; }

RationalMatrix normals_of(std::span<const AffineForm> forms, std::span<const std::size_t> rows,
                          Eigen::Index n) {
  RationalMatrix m(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    m.row(static_cast<Eigen::Index>(r)) = to_rational(forms[rows[r]].normal()).transpose();
  return m;
}

// Calls visit on every k-subset of {0..d-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t d, std::size_t k, Visit&& visit) {
  if (k > d) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(std::span<const std::size_t>(idx));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == d - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool has_recession_direction(std::span<const AffineForm> forms, Eigen::Index n) {
  std::vector<std::size_t> all(forms.size());
  std::iota(all.begin(), all.end(), 0);
  const RationalMatrix u = normals_of(forms, all, n);
  if (exact_rank(u) < n) return true;
  // The recession cone {y : U y >= 0} is pointed; it is nontrivial iff it
  // has an extreme ray, i.e. a direction cut out by n-1 independent rows.
  bool found = false;
  for_each_subset(forms.size(), static_cast<std::size_t>(n - 1), [&](std::span<const std::size_t> s) {
    if (found) return;
    const RationalMatrix sub = normals_of(forms, s, n);
    const RationalMatrix null = exact_nullspace<Rational>(sub);
    if (null.cols() != 1) return;
    for (int sign : {1, -1}) {
      const RationalVector y = null.col(0) * Rational(sign);
      const RationalVector uy = u * y;
      if ((uy.array() >= Rational(0)).all()) found = true;
    }
  });
  return found;
}

}  // namespace

IntVector primitive_direction(const RationalVector& v) {
  BigInt lcm(1);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(v(i))));
  std::vector<BigInt> scaled(static_cast<std::size_t>(v.size()));
  BigInt g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    scaled[i] = numerator(v(i)) * (lcm / BigInt(denominator(v(i))));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  if (g == 0) throw Error(ErrorCode::BadParams, "zero vector has no primitive direction");
  if (g < 0) g = -g;
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = to_int64(scaled[i] / g);
  return out;
}

AffineForm::AffineForm(IntVector normal, Rational offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
  if (normal_.size() == 0) throw Error(ErrorCode::InvalidForm, "empty normal");
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < normal_.size(); ++i) g = std::gcd(g, normal_(i));
  if (g == 0) throw Error(ErrorCode::InvalidForm, "normal must be nonzero");
  if (g != 1) throw Error(ErrorCode::InvalidForm, "normal must be primitive (gcd of entries is 1)");
}

Rational AffineForm::operator()(const RationalVector& x) const {
  Rational acc = -offset_;
  for (Eigen::Index i = 0; i < normal_.size(); ++i) acc += Rational(normal_(i)) * x(i);
  return acc;
}

std::vector<VertexData> enumerate_vertices(Eigen::Index n, std::span<const AffineForm> forms) {
  if (n < 1) throw Error(ErrorCode::BadParams, "dimension must be at least 1");
  for (const auto& f : forms)
    if (f.dimension() != n) throw Error(ErrorCode::BadParams, "form dimension mismatch");

  std::map<std::vector<Rational>, RationalVector> found;
  for_each_subset(forms.size(), static_cast<std::size_t>(n), [&](std::span<const std::size_t> s) {
    const RationalMatrix a = normals_of(forms, s, n);
    RationalVector b(n);
    for (Eigen::Index i = 0; i < n; ++i) b(i) = forms[s[i]].offset();
    auto x = exact_solve<Rational>(a, b);
    if (!x) return;
    for (const auto& f : forms)
      if (f(*x) < 0) return;
    found.emplace(key_of(*x), *x);
  });

  if (found.empty()) {
    if (has_recession_direction(forms, n)) throw Error(ErrorCode::Unbounded, "polyhedron has a recession direction");
    throw Error(ErrorCode::Empty, "no feasible point");
  }
  if (has_recession_direction(forms, n)) throw Error(ErrorCode::Unbounded, "polyhedron has a recession direction");

  std::vector<VertexData> vertices;
  vertices.reserve(found.size());
  for (auto& [key, x] : found) {
    VertexData v;
    v.coordinates = x;
    for (std::size_t k = 0; k < forms.size(); ++k)
      if (forms[k](x) == 0) v.incident_facets.push_back(k);
    vertices.push_back(std::move(v));
  }

  std::vector<RationalVector> coords;
  for (const auto& v : vertices) coords.push_back(v.coordinates);
  if (affine_span_rank(coords) < n)
    throw Error(ErrorCode::LowerDimensional, "vertices do not affinely span R^n");

  // Two vertices are adjacent iff their common facets cut out a 1-dimensional face.
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(vertices[i].incident_facets.begin(), vertices[i].incident_facets.end(),
                            vertices[j].incident_facets.begin(), vertices[j].incident_facets.end(),
                            std::back_inserter(common));
      if (exact_rank(normals_of(forms, common, n)) != n - 1) continue;
      const RationalVector dir = vertices[j].coordinates - vertices[i].coordinates;
      const IntVector gen = primitive_direction(dir);
      vertices[i].neighbors.push_back(j);
      vertices[i].edge_generators.push_back(gen);
      vertices[j].neighbors.push_back(i);
      vertices[j].edge_generators.push_back(-gen);
    }
  }

  // At a simple vertex, put the i-th edge on the one incident facet it leaves.
  for (auto& v : vertices) {
    if (v.incident_facets.size() != static_cast<std::size_t>(n) || v.edge_generators.size() != v.incident_facets.size())
      continue;
    std::vector<std::size_t> order;
    for (auto k : v.incident_facets) {
      for (std::size_t e = 0; e < v.edge_generators.size(); ++e)
        if (forms[k].normal().dot(v.edge_generators[e]) != 0 &&
            std::find(order.begin(), order.end(), e) == order.end()) {
          order.push_back(e);
          break;
        }
    }
    if (order.size() != v.edge_generators.size()) continue;
    VertexData sorted = v;
    for (std::size_t i = 0; i < order.size(); ++i) {
      sorted.neighbors[i] = v.neighbors[order[i]];
      sorted.edge_generators[i] = v.edge_generators[order[i]];
    }
    v = std::move(sorted);
  }
  return vertices;
}

DelzantPolytope DelzantPolytope::from_forms(Eigen::Index n, std::vector<AffineForm> forms) {
  auto vertices = enumerate_vertices(n, forms);
  for (std::size_t k = 0; k < forms.size(); ++k) {
    for (std::size_t l = 0; l < k; ++l)
      if (forms[k] == forms[l]) throw Error(ErrorCode::RedundantForm, "duplicate form " + std::to_string(k));
    std::vector<RationalVector> on_facet;
    for (const auto& v : vertices)
      if (std::binary_search(v.incident_facets.begin(), v.incident_facets.end(), k))
        on_facet.push_back(v.coordinates);
    if (on_facet.empty() || affine_span_rank(on_facet) != n - 1)
      throw Error(ErrorCode::RedundantForm, "form " + std::to_string(k) + " does not support a facet");
  }
  return DelzantPolytope(n, std::move(forms), std::move(vertices));
}

IntMatrix DelzantPolytope::normal_matrix() const {
  IntMatrix m(static_cast<Eigen::Index>(forms_.size()), n_);
  for (std::size_t k = 0; k < forms_.size(); ++k)
    m.row(static_cast<Eigen::Index>(k)) = forms_[k].normal().transpose();
  return m;
}

std::size_t DelzantPolytope::find_vertex(const RationalVector& x) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (x.size() == n_ && vertices_[i].coordinates == x) return i;
  return npos;
}

RationalVector DelzantPolytope::vertex_centroid() const {
  RationalVector c = RationalVector::Zero(n_);
  for (const auto& v : vertices_) c += v.coordinates;
  return c / Rational(static_cast<long>(vertices_.size()));
}

UnimodularMap::UnimodularMap(IntMatrix matrix, RationalVector translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() != translation_.size())
    throw Error(ErrorCode::BadParams, "unimodular map shape mismatch");
  const RationalMatrix a = to_rational(matrix_);
  const Rational det = exact_determinant(a);
  if (det != 1 && det != -1) throw Error(ErrorCode::NotUnimodular, "|det A| must be 1, got " + det.str());
  const RationalMatrix inv = *exact_inverse<Rational>(a);
  inverse_.resize(inv.rows(), inv.cols());
  for (Eigen::Index i = 0; i < inv.rows(); ++i)
    for (Eigen::Index j = 0; j < inv.cols(); ++j) inverse_(i, j) = to_int64(numerator(inv(i, j)));
}

UnimodularMap UnimodularMap::identity(Eigen::Index n) {
  return UnimodularMap(IntMatrix::Identity(n, n), RationalVector::Zero(n));
}

RationalVector UnimodularMap::operator()(const RationalVector& x) const {
  return to_rational(matrix_) * RationalVector(x - translation_);
}

Vec<double> UnimodularMap::operator()(const Vec<double>& x) const {
  return matrix_.cast<double>() * (x - rational_cast<double>(translation_));
}

UnimodularMap UnimodularMap::inverse() const {
  // x = A^{-1} x' + t = A^{-1} (x' - (-A t))
  return UnimodularMap(inverse_, RationalVector(-(to_rational(matrix_) * translation_)));
}

DelzantPolytope transform(const DelzantPolytope& p, const UnimodularMap& map) {
  const IntMatrix inv_t = map.inverse_matrix().transpose();
  std::vector<AffineForm> forms;
  for (const auto& f : p.forms()) {
    IntVector u = inv_t * f.normal();
    Rational shift = 0;
    for (Eigen::Index i = 0; i < u.size(); ++i) shift += Rational(f.normal()(i)) * map.translation()(i);
    forms.emplace_back(std::move(u), f.offset() - shift);
  }
  return DelzantPolytope::from_forms(p.dimension(), std::move(forms));
}

DelzantReport check_delzant(const DelzantPolytope& p) {
  DelzantReport report;
  const auto n = static_cast<std::size_t>(p.dimension());
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const auto& v = p.vertices()[i];
    DelzantReport::Vertex r{i, v.incident_facets.size(), v.edge_generators.size(), BigInt(0), false};
    if (r.edge_count == n) {
      RationalMatrix e(p.dimension(), p.dimension());
      for (std::size_t c = 0; c < n; ++c) e.col(static_cast<Eigen::Index>(c)) = to_rational(v.edge_generators[c]);
      const Rational det = exact_determinant(e);
      r.determinant = numerator(det < 0 ? Rational(-det) : det);
    }
    r.passes = r.incident_count == n && r.edge_count == n && r.determinant == 1;
    report.is_delzant = report.is_delzant && r.passes;
    report.vertices.push_back(std::move(r));
  }
  return report;
}

Normalization normalize_at_vertex(const DelzantPolytope& p, std::size_t vertex_index) {
  if (vertex_index >= p.vertices().size())
    throw Error(ErrorCode::NotDelzantVertex, "vertex index out of range");
  const auto report = check_delzant(p);
  if (!report.vertices[vertex_index].passes)
    throw Error(ErrorCode::NotDelzantVertex, "vertex " + std::to_string(vertex_index) + " fails the Delzant check");

  const auto& v = p.vertices()[vertex_index];
  const Eigen::Index n = p.dimension();
  IntMatrix edges(n, n);
  for (Eigen::Index c = 0; c < n; ++c) edges.col(c) = v.edge_generators[static_cast<std::size_t>(c)];
  const RationalMatrix edges_inv = *exact_inverse<Rational>(to_rational(edges));
  IntMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = numerator(edges_inv(i, j)).convert_to<std::int64_t>();
  UnimodularMap map(a, v.coordinates);

  const DelzantPolytope image = transform(p, map);
  std::vector<std::size_t> order(static_cast<std::size_t>(n), DelzantPolytope::npos);
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < image.forms().size(); ++k) {
    const auto& f = image.forms()[k];
    bool placed = false;
    if (f.offset() == 0) {
      for (Eigen::Index i = 0; i < n; ++i) {
        if (f.normal() == IntVector::Unit(n, i)) {
          order[static_cast<std::size_t>(i)] = k;
          placed = true;
        }
      }
    }
    if (!placed) rest.push_back(k);
  }
  if (std::find(order.begin(), order.end(), DelzantPolytope::npos) != order.end())
    throw Error(ErrorCode::NotDelzantVertex, "edge generators do not map facets to coordinate planes");
  order.insert(order.end(), rest.begin(), rest.end());

  std::vector<AffineForm> forms;
  for (auto k : order) forms.push_back(image.forms()[k]);
  return Normalization{std::move(map), DelzantPolytope::from_forms(n, std::move(forms)), std::move(order)};
}

Normalization normalize_at_vertex(const DelzantPolytope& p, const RationalVector& point) {
  const auto idx = p.find_vertex(point);
  if (idx == DelzantPolytope::npos) throw Error(ErrorCode::NotDelzantVertex, "point is not a vertex");
  return normalize_at_vertex(p, idx);
}

Eigen::Index affine_span_rank(std::span<const RationalVector> points) {
  if (points.empty()) throw Error(ErrorCode::BadParams, "affine_span_rank needs at least one point");
  const Eigen::Index n = points.front().size();
  RationalMatrix diffs(static_cast<Eigen::Index>(points.size()) - 1, n);
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.row(static_cast<Eigen::Index>(i) - 1) = (points[i] - points[0]).transpose();
  return exact_rank(diffs);
}

bool vertex_rank_check(const DelzantPolytope& p) {
  std::vector<RationalVector> coords;
  for (const auto& v : p.vertices()) coords.push_back(v.coordinates);
  return affine_span_rank(coords) == p.dimension();
}

}  // namespace toric
