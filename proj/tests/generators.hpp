#pragma once

#include <cstdint>
#include <random>

#include "tautclass/exactmath.hpp"
#include "tautclass/quadratic_number.hpp"

namespace testgen {

using tautclass::Integer;
using tautclass::Matrix;
using tautclass::Rational;
using tautclass::Vector;

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  std::int64_t nonzero_integer(std::int64_t bound) {
    std::int64_t v = 0;
    while (v == 0) v = integer(-bound, bound);
    return v;
  }

  /// p/q with |p|, q <= bound.
  Rational rational(std::int64_t bound) { return Rational(integer(-bound, bound), integer(1, bound)); }

  Rational nonzero_rational(std::int64_t bound) {
    return Rational(nonzero_integer(bound), integer(1, bound));
  }

  Rational positive_rational(std::int64_t bound) {
    return Rational(integer(1, bound), integer(1, bound));
  }

  Matrix<Rational> integer_matrix(Eigen::Index rows, Eigen::Index cols, std::int64_t bound) {
    Matrix<Rational> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = integer(-bound, bound);
    return m;
  }

  Matrix<Rational> rational_matrix(Eigen::Index rows, Eigen::Index cols, std::int64_t bound) {
    Matrix<Rational> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rational(bound);
    return m;
  }

  /// Columns form a linearly generic tuple.
  Matrix<Rational> generic_tuple(Eigen::Index n, Eigen::Index count, std::int64_t bound) {
    while (true) {
      Matrix<Rational> m = integer_matrix(n, count, bound);
      if (tautclass::is_linearly_generic(m)) return m;
    }
  }

  /// Random element of SL(2,Q) with integer entries in [-bound, bound].
  Matrix<Rational> sl2_integer(std::int64_t bound) {
    while (true) {
      const std::int64_t a = integer(-bound, bound), b = integer(-bound, bound);
      const std::int64_t c = integer(-bound, bound);
      // Solve a*d - b*c = 1 for integer d when possible.
      if (a == 0) continue;
      const std::int64_t num = 1 + b * c;
      if (num % a != 0) continue;
      const std::int64_t d = num / a;
      if (d < -bound || d > bound) continue;
      Matrix<Rational> m(2, 2);
      m << a, b, c, d;
      return m;
    }
  }

  /// Random element of SL(2,Q) with small rational entries.
  Matrix<Rational> sl2_rational(std::int64_t bound) {
    while (true) {
      const Rational a = nonzero_rational(bound), b = rational(bound), c = rational(bound);
      Matrix<Rational> m(2, 2);
      m << a, b, c, (1 + b * c) / a;
      return m;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Laplace expansion along the first row.
template <class Scalar>
Scalar cofactor_determinant(const Matrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar total(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    Matrix<Scalar> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = m(r, c);
    const Scalar term = m(0, j) * cofactor_determinant(minor);
    total = (j % 2 == 0) ? Scalar(total + term) : Scalar(total - term);
  }
  return total;
}

}  // namespace testgen
