#pragma once

// Gaussian elimination over an exact field. Pivots are chosen as the first
// nonzero entry, never by magnitude, so these are only meaningful for exact
// scalar types such as Rational.

#include <optional>
#include <utility>
#include <vector>

#include "toric/types.hpp"

namespace toric {

namespace detail {

// Reduces m in place to row echelon form; returns the pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> row_echelon(Mat<Scalar>& m, Scalar* det_sign = nullptr) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  Scalar sign(1);
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == Scalar(0)) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      m.row(p).swap(m.row(row));
      sign = -sign;
    }
    for (Eigen::Index r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col) / m(row, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  if (det_sign) *det_sign = sign;
  return pivots;
}

}  // namespace detail

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  Mat<typename Derived::Scalar> work = m;
  return static_cast<Eigen::Index>(detail::row_echelon(work).size());
}

template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(m.rows() == m.cols());
  Mat<Scalar> work = m;
  Scalar sign;
  const auto pivots = detail::row_echelon(work, &sign);
  if (static_cast<Eigen::Index>(pivots.size()) < m.rows()) return Scalar(0);
  Scalar det = sign;
  for (Eigen::Index i = 0; i < m.rows(); ++i) det *= work(i, i);
  return det;
}

// Unique solution of a x = b for square a, or nullopt when a is singular.
template <typename Scalar>
std::optional<Vec<Scalar>> exact_solve(const Mat<Scalar>& a, const Vec<Scalar>& b) {
  const Eigen::Index n = a.rows();
  Mat<Scalar> aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto pivots = detail::row_echelon(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots.back() >= n) return std::nullopt;
  Vec<Scalar> x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Scalar acc = aug(i, n);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= aug(i, j) * x(j);
    x(i) = acc / aug(i, i);
  }
  return x;
}

template <typename Scalar>
std::optional<Mat<Scalar>> exact_inverse(const Mat<Scalar>& a) {
  const Eigen::Index n = a.rows();
  Mat<Scalar> inv(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Vec<Scalar> e = Vec<Scalar>::Zero(n);
    e(j) = Scalar(1);
    auto col = exact_solve<Scalar>(a, e);
    if (!col) return std::nullopt;
    inv.col(j) = *col;
  }
  return inv;
}

// Basis of the right null space {x : a x = 0}, one column per free variable.
template <typename Scalar>
Mat<Scalar> exact_nullspace(const Mat<Scalar>& a) {
  Mat<Scalar> work = a;
  const auto pivots = detail::row_echelon(work);
  const Eigen::Index cols = a.cols();
  // Back-substitute to reduced row echelon form.
  for (Eigen::Index r = static_cast<Eigen::Index>(pivots.size()) - 1; r >= 0; --r) {
    const Eigen::Index pc = pivots[r];
    const Scalar lead = work(r, pc);
    for (Eigen::Index c = pc; c < cols; ++c) work(r, c) /= lead;
    for (Eigen::Index above = 0; above < r; ++above) {
      const Scalar factor = work(above, pc);
      if (factor == Scalar(0)) continue;
      for (Eigen::Index c = pc; c < cols; ++c) work(above, c) -= factor * work(r, c);
    }
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto pc : pivots) is_pivot[pc] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Mat<Scalar> basis = Mat<Scalar>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    basis(f, k) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -work(r, f);
  }
  return basis;
}

// Scales a rational vector to the unique primitive integer vector pointing
// the same way. The input must be nonzero.
IntVector primitive_direction(const RationalVector& v);

}  // namespace toric
