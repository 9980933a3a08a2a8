#include "doctest.h"
#include "support.hpp"

using namespace test;

namespace {

DelzantPolytope unit_square() { return polytope(2, {form({1, 0}, 0), form({0, 1}, 0), form({-1, 0}, -1), form({0, -1}, -1)}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("affine form rejects zero and non-primitive normals") {
  CHECK(code_of([] { form({0, 0}, 0); }) == ErrorCode::InvalidForm);
  CHECK(code_of([] { form({2, 4}, 1); }) == ErrorCode::InvalidForm);
  const auto f = form({-1, -1}, -1);
  CHECK(f(rvec({Rational(1, 3), Rational(1, 3)})) == Rational(1, 3));
}

TEST_CASE("enumerate_vertices on small examples") {
  const auto square = unit_square();
  CHECK(same_points(vertex_set(square), {rvec({0, 0}), rvec({1, 0}), rvec({0, 1}), rvec({1, 1})}));

  const auto simplex = catalog("simplex:2:1");
  CHECK(same_points(vertex_set(simplex), {rvec({0, 0}), rvec({1, 0}), rvec({0, 1})}));

  const std::vector<AffineForm> quadrant{form({1, 0}, 0), form({0, 1}, 0)};
  CHECK(code_of([&] { enumerate_vertices(2, quadrant); }) == ErrorCode::Unbounded);

  const std::vector<AffineForm> strip{form({1, 0}, 0), form({-1, 0}, -1)};
  CHECK(code_of([&] { enumerate_vertices(2, strip); }) == ErrorCode::Unbounded);

  const std::vector<AffineForm> empty{form({1, 0}, 1), form({-1, 0}, 0), form({0, 1}, 0), form({0, -1}, -1)};
  CHECK(code_of([&] { enumerate_vertices(2, empty); }) == ErrorCode::Empty);

  const std::vector<AffineForm> flat{form({1, 0}, 0), form({-1, 0}, 0), form({0, 1}, 0), form({0, -1}, -1)};
  CHECK(code_of([&] { enumerate_vertices(2, flat); }) == ErrorCode::LowerDimensional);

  CHECK(code_of([] { polytope(2, {form({1, 0}, 0), form({0, 1}, 0), form({-1, -1}, -1), form({-1, 0}, -5)}); }) ==
        ErrorCode::RedundantForm);
}

TEST_CASE("every vertex records incident facets, neighbours and edges") {
  const auto square = unit_square();
  for (const auto& v : square.vertices()) {
    CHECK(v.incident_facets.size() == 2);
    CHECK(v.neighbors.size() == 2);
    for (std::size_t k = 0; k < square.forms().size(); ++k) {
      const Rational lambda = square.forms()[k](v.coordinates);
      CHECK(lambda >= 0);
      CHECK((lambda == 0) == std::binary_search(v.incident_facets.begin(), v.incident_facets.end(), k));
    }
  }
}

TEST_CASE("check_delzant") {
  const auto square = check_delzant(unit_square());
  CHECK(square.is_delzant);
  CHECK(square.vertices.size() == 4);

  const auto tri = polytope(2, {form({1, 0}, 0), form({0, 1}, 0), form({-1, -2}, -2)});
  const auto report = check_delzant(tri);
  CHECK_FALSE(report.is_delzant);
  int failures = 0;
  for (const auto& v : report.vertices) {
    if (v.passes) continue;
    ++failures;
    CHECK(tri.vertices()[v.index].coordinates == rvec({0, 1}));
    CHECK(v.determinant == 2);
  }
  CHECK(failures == 1);

  const auto f1 = polytope(2, {form({1, 0}, 0), form({0, 1}, 0), form({-1, -1}, -2), form({-1, 0}, -1)});
  const auto f1_report = check_delzant(f1);
  CHECK(f1_report.is_delzant);
  CHECK(f1_report.vertices.size() == 4);
}

TEST_CASE("non-simple vertex fails the incidence count") {
  // Square pyramid: the apex lies on four facets.
  const auto pyramid = polytope(3, {form({0, 0, 1}, 0), form({0, -1, -1}, -1), form({0, 1, -1}, -1),
                                    form({-1, 0, -1}, -1), form({1, 0, -1}, -1)});
  const auto report = check_delzant(pyramid);
  CHECK_FALSE(report.is_delzant);
  const auto apex = pyramid.find_vertex(rvec({0, 0, 1}));
  REQUIRE(apex != DelzantPolytope::npos);
  CHECK(report.vertices[apex].incident_count == 4);
  CHECK_FALSE(report.vertices[apex].passes);
}

TEST_CASE("normalize_at_vertex") {
  const auto simplex = catalog("simplex:2:1");
  const auto at_origin = normalize_at_vertex(simplex, rvec({0, 0}));
  CHECK(at_origin.map.matrix() == IntMatrix::Identity(2, 2));
  CHECK(at_origin.map.translation() == rvec({0, 0}));

  const auto square = unit_square();
  const auto at_corner = normalize_at_vertex(square, rvec({1, 1}));
  CHECK(at_corner.map.matrix() == IntMatrix(-IntMatrix::Identity(2, 2)));
  CHECK(at_corner.map(rvec({1, 1})) == rvec({0, 0}));
  CHECK(same_points(vertex_set(at_corner.polytope), vertex_set(square)));
  for (Eigen::Index i = 0; i < 2; ++i) {
    CHECK(at_corner.polytope.forms()[static_cast<std::size_t>(i)].normal() == IntVector::Unit(2, i));
    CHECK(at_corner.polytope.forms()[static_cast<std::size_t>(i)].offset() == 0);
  }

  CHECK(code_of([&] { normalize_at_vertex(square, rvec({Rational(1, 2), 0})); }) == ErrorCode::NotDelzantVertex);

  const auto tri = polytope(2, {form({1, 0}, 0), form({0, 1}, 0), form({-1, -2}, -2)});
  CHECK(code_of([&] { normalize_at_vertex(tri, rvec({0, 1})); }) == ErrorCode::NotDelzantVertex);
}

TEST_CASE("unimodular maps") {
  IntMatrix a(2, 2);
  a << 2, 1, 1, 1;
  const UnimodularMap m(a, rvec({1, 2}));
  CHECK(m(rvec({1, 2})) == rvec({0, 0}));
  const auto back = m.inverse();
  const auto x = rvec({Rational(3, 7), -5});
  CHECK(back(m(x)) == x);
  CHECK(m(back(x)) == x);

  IntMatrix singular(2, 2);
  singular << 2, 0, 0, 1;
  CHECK(code_of([&] { UnimodularMap(singular, rvec({0, 0})); }) == ErrorCode::NotUnimodular);
}

TEST_CASE("affine_span_rank") {
  const auto square = unit_square();
  CHECK(affine_span_rank(vertex_set(square)) == 2);
  CHECK(vertex_rank_check(square));
  const std::vector<RationalVector> simplex{rvec({0, 0}), rvec({1, 0}), rvec({0, 1})};
  CHECK(affine_span_rank(simplex) == 2);
  const std::vector<RationalVector> line{rvec({0, 0}), rvec({1, 1}), rvec({2, 2})};
  CHECK(affine_span_rank(line) == 1);
  const std::vector<RationalVector> one{rvec({5, 5})};
  CHECK(affine_span_rank(one) == 0);
}

TEST_CASE("catalog entries") {
  const auto simplex = catalog("simplex:2:1");
  REQUIRE(simplex.forms().size() == 3);
  CHECK(simplex.forms()[0] == form({1, 0}, 0));
  CHECK(simplex.forms()[1] == form({0, 1}, 0));
  CHECK(simplex.forms()[2] == form({-1, -1}, -1));

  const auto f1 = catalog("hirzebruch:1");
  CHECK(f1.forms() ==
        std::vector<AffineForm>{form({1, 0}, 0), form({0, 1}, 0), form({-1, -1}, -2), form({-1, 0}, -1)});

  const auto f0 = catalog("hirzebruch:0");
  CHECK(same_points(vertex_set(f0), vertex_set(unit_square())));

  CHECK(code_of([] { catalog("dodecahedron"); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { catalog("simplex:0:1"); }) == ErrorCode::BadParams);
  CHECK(code_of([] { catalog("cube:2:x"); }) == ErrorCode::BadParams);

  for (const auto& name : standard_catalog()) {
    CAPTURE(name);
    const auto p = catalog(name);
    CHECK(check_delzant(p).is_delzant);
    CHECK(vertex_rank_check(p));
    for (const auto& v : p.vertices()) {
      CHECK(static_cast<Eigen::Index>(v.incident_facets.size()) == p.dimension());
      CHECK(static_cast<Eigen::Index>(v.edge_generators.size()) == p.dimension());
    }
  }
}

TEST_CASE("vertex enumeration commutes with unimodular maps") {
  std::mt19937_64 rng(7);
  for (const auto& name : standard_catalog()) {
    CAPTURE(name);
    const auto p = catalog(name);
    const Eigen::Index n = p.dimension();
    for (int trial = 0; trial < 3; ++trial) {
      RationalVector t(n);
      for (Eigen::Index i = 0; i < n; ++i) t(i) = Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 4));
      const UnimodularMap m(random_unimodular(n, rng), t);
      const auto image = transform(p, m);
      std::vector<RationalVector> mapped;
      for (const auto& v : p.vertices()) mapped.push_back(m(v.coordinates));
      CHECK(same_points(vertex_set(image), mapped));
      CHECK(check_delzant(image).is_delzant);
    }
  }
}

TEST_CASE("normalization composed with its inverse restores the vertex set") {
  for (const auto& name : standard_catalog()) {
    CAPTURE(name);
    const auto p = catalog(name);
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      const auto norm = normalize_at_vertex(p, i);
      CHECK(norm.map(p.vertices()[i].coordinates) == RationalVector::Zero(p.dimension()));
      for (Eigen::Index k = 0; k < p.dimension(); ++k) {
        const auto& f = norm.polytope.forms()[static_cast<std::size_t>(k)];
        CHECK(f.normal() == IntVector::Unit(p.dimension(), k));
        CHECK(f.offset() == 0);
      }
      const auto restored = transform(norm.polytope, norm.map.inverse());
      CHECK(same_points(vertex_set(restored), vertex_set(p)));
    }
  }
}
