#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace toric {

// Exact field for all combinatorial work. Expression templates are disabled
// so that Eigen sees a plain value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vec<std::int64_t>;
using IntMatrix = Mat<std::int64_t>;
using RationalVector = Vec<Rational>;
using RationalMatrix = Mat<Rational>;

enum class ErrorCode {
  InvalidForm,
  Unbounded,
  Empty,
  LowerDimensional,
  RedundantForm,
  NotUnimodular,
  NotDelzantVertex,
  NotNormalized,
  UnknownName,
  BadParams,
  OutsideDomain,
  NotPositiveDefinite,
  DegenerateSampleSet,
  PreconditionViolated,
  NotFano,
  QuadratureNotConverged,
  MaxIterations,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        double value = std::numeric_limits<double>::quiet_NaN())
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        value_(value) {}

  ErrorCode code() const noexcept { return code_; }
  // Offending numeric quantity when one exists (e.g. the smallest eigenvalue
  // for NotPositiveDefinite); NaN otherwise.
  double value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  double value_;
};

template <typename Scalar>
Scalar rational_cast(const Rational& r) {
  return r.convert_to<Scalar>();
}

template <typename Scalar>
Vec<Scalar> rational_cast(const RationalVector& v) {
  Vec<Scalar> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).convert_to<Scalar>();
  return out;
}

inline RationalVector to_rational(const IntVector& v) {
  RationalVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational(v(i));
  return out;
}

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace toric
