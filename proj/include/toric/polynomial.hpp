#pragma once

#include <map>
#include <span>
#include <vector>

#include "toric/types.hpp"

namespace toric {

/// Multivariate polynomial with exact rational coefficients. Evaluation and
/// differentiation are done in a floating scalar; composition is exact.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(Eigen::Index n = 1) : n_(n) {}
  Polynomial(Eigen::Index n, std::map<Exponents, Rational> terms);

  static Polynomial constant(Eigen::Index n, const Rational& c);
  static Polynomial variable(Eigen::Index n, Eigen::Index i);
  static Polynomial monomial(const Rational& coeff, Exponents exponents);

  Eigen::Index variables() const noexcept { return n_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// q(x) = p(M x + c), with M of size variables() x m.
  Polynomial compose_affine(const RationalMatrix& m, const RationalVector& c) const;

  /// Partial derivative d^k p / dx_{vars[0]} ... dx_{vars[k-1]} evaluated at x.
  template <typename Scalar>
  Scalar derivative(std::span<const int> vars, const Vec<Scalar>& x) const {
    Scalar total(0);
    std::vector<int> counts(static_cast<std::size_t>(n_), 0);
    for (int v : vars) ++counts[static_cast<std::size_t>(v)];
    for (const auto& t : cache_) {
      Scalar term = static_cast<Scalar>(t.coeff);
      bool vanishes = false;
      for (Eigen::Index i = 0; i < n_ && !vanishes; ++i) {
        const int e = t.exponents[static_cast<std::size_t>(i)];
        const int k = counts[static_cast<std::size_t>(i)];
        if (k > e) {
          vanishes = true;
          break;
        }
        for (int j = 0; j < k; ++j) term *= static_cast<Scalar>(e - j);
        for (int j = 0; j < e - k; ++j) term *= x(i);
      }
      if (!vanishes) total += term;
    }
    return total;
  }

  template <typename Scalar>
  Scalar operator()(const Vec<Scalar>& x) const {
    return derivative<Scalar>({}, x);
  }

 private:
  struct CachedTerm {
    Exponents exponents;
    long double coeff;
  };
  void rebuild_cache();

  Eigen::Index n_;
  std::map<Exponents, Rational> terms_;
  std::vector<CachedTerm> cache_;
};

}  // namespace toric
