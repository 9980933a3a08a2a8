#include "toric/polynomial.hpp"

#include <algorithm>

namespace toric {

Polynomial::Polynomial(Eigen::Index n, std::map<Exponents, Rational> terms) : n_(n) {
  for (auto& [e, c] : terms) {
    if (static_cast<Eigen::Index>(e.size()) != n)
      throw Error(ErrorCode::BadParams, "monomial exponent count does not match variable count");
    if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; }))
      throw Error(ErrorCode::BadParams, "negative exponent");
    if (c != 0) terms_[e] += c;
  }
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  rebuild_cache();
}

Polynomial Polynomial::constant(Eigen::Index n, const Rational& c) {
  return Polynomial(n, {{Exponents(static_cast<std::size_t>(n), 0), c}});
}

Polynomial Polynomial::variable(Eigen::Index n, Eigen::Index i) {
  Exponents e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return Polynomial(n, {{e, Rational(1)}});
}

Polynomial Polynomial::monomial(const Rational& coeff, Exponents exponents) {
  const auto n = static_cast<Eigen::Index>(exponents.size());
  return Polynomial(n, {{std::move(exponents), coeff}});
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (int k : e) total += k;
    d = std::max(d, total);
  }
  return d;
}

void Polynomial::rebuild_cache() {
  cache_.clear();
  for (const auto& [e, c] : terms_) cache_.push_back({e, c.convert_to<long double>()});
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::BadParams, "polynomial variable count mismatch");
  auto terms = a.terms_;
  for (const auto& [e, c] : b.terms_) terms[e] += c;
  return Polynomial(a.n_, std::move(terms));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::BadParams, "polynomial variable count mismatch");
  std::map<Polynomial::Exponents, Rational> terms;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      terms[e] += ca * cb;
    }
  }
  return Polynomial(a.n_, std::move(terms));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  return Polynomial::constant(p.n_, c) * p;
}

Polynomial Polynomial::compose_affine(const RationalMatrix& m, const RationalVector& c) const {
  if (m.rows() != n_ || c.size() != n_) throw Error(ErrorCode::BadParams, "affine substitution shape mismatch");
  const Eigen::Index out_vars = m.cols();
  // Each variable x_i becomes the affine polynomial sum_j m_ij y_j + c_i.
  std::vector<Polynomial> images;
  for (Eigen::Index i = 0; i < n_; ++i) {
    Polynomial img = constant(out_vars, c(i));
    for (Eigen::Index j = 0; j < out_vars; ++j)
      if (m(i, j) != 0) img = img + m(i, j) * variable(out_vars, j);
    images.push_back(std::move(img));
  }
  Polynomial result(out_vars);
  for (const auto& [e, coeff] : terms_) {
    Polynomial term = constant(out_vars, coeff);
    for (Eigen::Index i = 0; i < n_; ++i)
      for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) term = term * images[static_cast<std::size_t>(i)];
    result = result + term;
  }
  return result;
}

}  // namespace toric
