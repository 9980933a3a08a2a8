#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "toric/toric.hpp"

namespace test {

using namespace toric;

inline AffineForm form(std::initializer_list<std::int64_t> u, Rational b) {
  IntVector v(static_cast<Eigen::Index>(u.size()));
  Eigen::Index i = 0;
  for (auto c : u) v(i++) = c;
  return AffineForm(v, b);
}

inline RationalVector rvec(std::initializer_list<Rational> xs) {
  RationalVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& c : xs) v(i++) = c;
  return v;
}

inline Vec<double> dvec(std::initializer_list<double> xs) {
  Vec<double> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double c : xs) v(i++) = c;
  return v;
}

inline DelzantPolytope polytope(Eigen::Index n, std::vector<AffineForm> forms) {
  return DelzantPolytope::from_forms(n, std::move(forms));
}

// Product of random elementary matrices; entries stay in [-bound, bound].
inline IntMatrix random_unimodular(Eigen::Index n, std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  while (true) {
    IntMatrix m = IntMatrix::Identity(n, n);
    for (int s = 0; s < 6; ++s) {
      const int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      IntMatrix e = IntMatrix::Identity(n, n);
      e(i, j) = coef(rng);
      m = e * m;
    }
    if (rng() % 2) m.row(0) *= -1;
    if (m.cwiseAbs().maxCoeff() <= bound && m != IntMatrix::Identity(n, n)) return m;
  }
}

inline std::vector<RationalVector> vertex_set(const DelzantPolytope& p) {
  std::vector<RationalVector> out;
  for (const auto& v : p.vertices()) out.push_back(v.coordinates);
  return out;
}

inline bool same_points(std::vector<RationalVector> a, std::vector<RationalVector> b) {
  auto less = [](const RationalVector& x, const RationalVector& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

// Interior points at least `margin` away from every facet.
inline std::vector<Vec<double>> seeded_points(const DelzantPolytope& p, std::size_t count, std::uint64_t seed,
                                               double margin = 0.02) {
  return random_interior_points(p, count, seed, margin * diameter(p));
}

}  // namespace test
