#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace test;
using doctest::Approx;

namespace {

// On {x, y >= -1, -1 <= x + y <= 1} the slice s = x + y has length s + 2, so
// <(1,1), int x e^{t(x+y)}> = int_{-1}^{1} s (s + 2) e^{ts} ds.
double diagonal_moment(double t) {
  auto antiderivative = [t](double s) {
    const double p = s * s + 2 * s, dp = 2 * s + 2, ddp = 2;
    return std::exp(t * s) * (p / t - dp / (t * t) + ddp / (t * t * t));
  };
  return antiderivative(1) - antiderivative(-1);
}

double bisect_diagonal_soliton() {
  double lo = -5, hi = -1e-3;  // the moment is increasing in t and positive at 0
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (diagonal_moment(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

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

TEST_CASE("anticanonical normalization") {
  const auto cp2 = fano_normalize(catalog("simplex:2:1"));
  CHECK(same_points(vertex_set(cp2.polytope()), {rvec({-1, -1}), rvec({2, -1}), rvec({-1, 2})}));

  const auto f1 = fano_normalize(catalog("hirzebruch:1"));
  CHECK(same_points(vertex_set(f1.polytope()), {rvec({-1, -1}), rvec({1, -1}), rvec({1, 0}), rvec({-1, 2})}));
  CHECK(check_delzant(f1.polytope()).is_delzant);
  for (const auto& f : f1.polytope().forms()) CHECK(f(RationalVector::Zero(2)) == 1);

  CHECK(code_of([] { fano_normalize(catalog("hirzebruch:2")); }) == ErrorCode::NotFano);
  // Same fan with normals (1,0), (0,1), (0,-1), (-1,2).
  const auto f2 = polytope(2, {form({1, 0}, 0), form({0, 1}, 0), form({0, -1}, -1), form({-1, 2}, -2)});
  REQUIRE(check_delzant(f2).is_delzant);
  try {
    fano_normalize(f2);
    FAIL("expected NotFano");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFano);
    CHECK(std::string(e.what()).find("(-1, -1)") != std::string::npos);
  }

  for (const auto& name : standard_catalog()) {
    CAPTURE(name);
    const auto fp = fano_normalize(catalog(name));
    CHECK(check_delzant(fp.polytope()).is_delzant);
  }
}

TEST_CASE("exact volumes") {
  CHECK(exact_volume(fano_normalize(catalog("simplex:2:1")).polytope()) == Rational(9, 2));
  CHECK(exact_volume(fano_normalize(catalog("cube:2:1")).polytope()) == 4);
  CHECK(exact_volume(catalog("simplex:3:1")) == Rational(1, 6));
  CHECK(exact_volume(catalog("cube:3:1")) == 1);
  CHECK(exact_volume(catalog("hirzebruch:1")) == Rational(3, 2));
  CHECK(exact_volume(catalog("blowup_cp2:1")) == 4);
}

TEST_CASE("exponential moments over anticanonical polytopes") {
  const auto square = fano_normalize(catalog("cube:2:1"));
  const auto m0 = polytope_integral(square, dvec({0, 0}));
  CHECK(m0.mass == Approx(4.0).epsilon(1e-13));
  CHECK(m0.first.norm() <= 1e-13);
  CHECK(m0.second(0, 0) == Approx(4.0 / 3).epsilon(1e-13));
  CHECK(std::abs(m0.second(0, 1)) <= 1e-13);

  const auto m1 = polytope_integral(square, dvec({0.7, -1.3}));
  const auto sinh_ratio = [](double a) { return 2 * std::sinh(a) / a; };
  CHECK(m1.mass == Approx(sinh_ratio(0.7) * sinh_ratio(-1.3)).epsilon(1e-12));

  const auto cp2 = fano_normalize(catalog("simplex:2:1"));
  const auto m2 = polytope_integral(cp2, dvec({0, 0}));
  CHECK(m2.mass == Approx(4.5).epsilon(1e-13));
  CHECK(m2.first.norm() <= 1e-12);

  for (const auto& name : standard_catalog()) {
    CAPTURE(name);
    const auto fp = fano_normalize(catalog(name));
    const auto m = polytope_integral(fp, Vec<double>::Zero(fp.polytope().dimension()));
    CHECK(m.mass == Approx(static_cast<double>(exact_volume(fp.polytope()))).epsilon(1e-12));
    CHECK(m.error_estimate <= 1e-10);
  }
}

TEST_CASE("soliton vectors") {
  for (const char* name : {"simplex:2:1", "cube:2:1", "cube:3:1", "simplex:3:1", "blowup_cp2:3", "hirzebruch:0"}) {
    CAPTURE(name);
    const auto data = soliton_vector(fano_normalize(catalog(name)));
    CHECK(data.a.norm() <= 1e-8);
    CHECK(data.gradient_residual <= 1e-10);
  }

  const double oracle = bisect_diagonal_soliton();
  CHECK(oracle == Approx(-0.5276195198969).epsilon(1e-10));
  const auto f1 = soliton_vector(fano_normalize(catalog("blowup_cp2:1")));
  CHECK(f1.gradient_residual <= 1e-10);
  CHECK(std::abs(f1.a(0) - f1.a(1)) <= 1e-8);
  CHECK(std::abs(f1.a(0)) > 0.1);
  CHECK(std::abs(f1.a(0) - oracle) <= 1e-6);

  // The other presentation of the same surface has the swap T(x, y) = (x, -x - y).
  const auto f1b = soliton_vector(fano_normalize(catalog("hirzebruch:1")));
  CHECK(std::abs(f1b.a(1)) <= 1e-8);
  const auto mass_a = polytope_integral(fano_normalize(catalog("blowup_cp2:1")), f1.a).mass;
  const auto mass_b = polytope_integral(fano_normalize(catalog("hirzebruch:1")), f1b.a).mass;
  CHECK(mass_a == Approx(mass_b).epsilon(1e-12));

  SolitonOptions tight;
  tight.max_iterations = 1;
  CHECK(code_of([&] { soliton_vector(fano_normalize(catalog("blowup_cp2:1")), tight); }) == ErrorCode::MaxIterations);
}

TEST_CASE("soliton vector is equivariant") {
  std::mt19937_64 rng(12);
  for (const char* name : {"blowup_cp2:1", "blowup_cp2:2", "hirzebruch:1", "simplex:3:1"}) {
    CAPTURE(name);
    const auto p = catalog(name);
    const Eigen::Index n = p.dimension();
    const auto base = soliton_vector(fano_normalize(p));
    for (int trial = 0; trial < 3; ++trial) {
      const IntMatrix a = random_unimodular(n, rng);
      const auto image = transform(p, UnimodularMap(a, RationalVector::Zero(n)));
      const auto mapped = soliton_vector(fano_normalize(image));
      const Vec<double> expected = a.cast<double>().transpose().inverse() * base.a;
      CHECK((mapped.a - expected).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}

TEST_CASE("F is convex along lines through the minimizer") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (const auto& name : standard_catalog()) {
    CAPTURE(name);
    const auto fp = fano_normalize(catalog(name));
    const auto a = soliton_vector(fp).a;
    for (int line = 0; line < 3; ++line) {
      Vec<double> d(a.size());
      for (auto& v : d) v = normal(rng);
      d.normalize();
      std::vector<double> f;
      for (int k = -4; k <= 4; ++k) f.push_back(polytope_integral(fp, a + 0.25 * k * d).mass);
      for (std::size_t k = 1; k + 1 < f.size(); ++k) CHECK(f[k - 1] - 2 * f[k] + f[k + 1] >= 0.0);
      CHECK(f[4] <= *std::min_element(f.begin(), f.end()) + 1e-12);
    }
  }
}

TEST_CASE("theorem replay examples") {
  const SymplecticPotential cube(catalog("cube:2:1"));
  const auto v = verify_theorem(cube, dvec({1, 0}), GridSpec{});
  CHECK(v.conclusion == Conclusion::HypothesisFails);
  CHECK(v.fit.max_residual >= 0.1);
  REQUIRE(v.vertex_limits.size() == 4);
  for (double q : v.vertex_limits) CHECK(std::abs(q) <= 1e-6);

  for (const auto& name : standard_catalog()) {
    CAPTURE(name);
    const SymplecticPotential pot(catalog(name));
    const auto e = verify_theorem(pot, Vec<double>::Zero(pot.dimension()), GridSpec{8});
    CHECK(e.conclusion == Conclusion::Einstein);
    CHECK(e.rank == pot.dimension());
    CHECK(e.certificates.q_affine);
    CHECK(e.certificates.vertices_vanish);
    CHECK(e.certificates.vertices_span);
    CHECK(e.certificates.soliton_vanishes);
  }

  const auto square = catalog("cube:2:1");
  const auto pts = interior_grid(square, {10, 1e-3});
  std::vector<Sample> zeros;
  for (const auto& x : pts) zeros.push_back({x, 0.0});
  const auto z = replay_theorem(square, zeros);
  CHECK(z.conclusion == Conclusion::Einstein);
  CHECK(std::abs(z.fit.constant) <= 1e-12);
  CHECK(z.fit.gradient.cwiseAbs().maxCoeff() <= 1e-12);

  std::vector<Sample> tilted;
  for (const auto& x : pts) tilted.push_back({x, 1 + x(0)});
  const auto t = replay_theorem(square, tilted);
  CHECK(t.conclusion == Conclusion::Inconclusive);
  CHECK_FALSE(t.certificates.vertices_vanish);

  std::vector<Sample> curved;
  for (const auto& x : pts) curved.push_back({x, x(0) * (1 - x(0))});
  CHECK(replay_theorem(square, curved).conclusion == Conclusion::HypothesisFails);
}

TEST_CASE("Einstein is never concluded for a nonzero sampled q") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> normal;
  for (const auto& name : standard_catalog()) {
    CAPTURE(name);
    const SymplecticPotential pot(catalog(name));
    const auto pts = interior_grid(pot.polytope(), {8, 1e-3});
    for (double scale : {1e-6, 1e-3, 1.0}) {
      Vec<double> a(pot.dimension());
      for (auto& v : a) v = scale * normal(rng);
      const auto v = verify_theorem(pot, a, pts);
      if (v.q_max > v.certificates.fit_bound) CHECK(v.conclusion != Conclusion::Einstein);
      if (v.certificates.q_affine)
        for (double val : v.vertex_values) CHECK(std::abs(val) <= v.vertex_tolerance);
      for (double q : v.vertex_limits) CHECK(q <= 1e-6 * std::max(1.0, a.squaredNorm()));
    }
  }
}
