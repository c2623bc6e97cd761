#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace tautclass {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Raised when a tuple of vectors fails a genericity requirement.
class GenericityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline int sign(const Integer& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }
inline int sign(double x) { return (x > 0) - (x < 0); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

/// Exact determinant by Bareiss elimination with row pivoting.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  Scalar previous(1);
  bool negate = false;
  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    if constexpr (std::is_floating_point_v<Scalar>) {
      for (Index r = k + 1; r < n; ++r)
        if (std::abs(a(r, k)) > std::abs(a(pivot, k))) pivot = r;
    } else {
      while (pivot < n && is_zero(a(pivot, k))) ++pivot;
      if (pivot == n) return Scalar(0);
    }
    if (is_zero(a(pivot, k))) return Scalar(0);
    if (pivot != k) {
      a.row(pivot).swap(a.row(k));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
    }
    previous = a(k, k);
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Rank by Gaussian elimination over the field.
template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index pivot = r;
    while (pivot < a.rows() && is_zero(a(pivot, c))) ++pivot;
    if (pivot == a.rows()) continue;
    a.row(pivot).swap(a.row(r));
    for (Index i = r + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, c))) continue;
      const Scalar factor = a(i, c) / a(r, c);
      for (Index j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - factor * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Some solution of M x = b with free variables set to zero; empty if inconsistent.
template <class Derived, class DerivedB>
std::vector<Vector<typename Derived::Scalar>> solve_any(const Eigen::MatrixBase<Derived>& m,
                                                        const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Derived::Scalar;
  const Index rows = m.rows(), cols = m.cols();
  Matrix<Scalar> a(rows, cols + 1);
  a.leftCols(cols) = m;
  a.col(cols) = b;
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = r;
    while (pivot < rows && is_zero(a(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    a.row(pivot).swap(a.row(r));
    const Scalar lead = a(r, c);
    for (Index j = c; j <= cols; ++j) a(r, j) = a(r, j) / lead;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Scalar factor = a(i, c);
      for (Index j = c; j <= cols; ++j) a(i, j) = a(i, j) - factor * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (Index i = r; i < rows; ++i)
    if (!is_zero(a(i, cols))) return {};
  Vector<Scalar> x = Vector<Scalar>::Constant(cols, Scalar(0));
  for (Index i = 0; i < r; ++i) x(pivots[static_cast<std::size_t>(i)]) = a(i, cols);
  return {x};
}

/// Linear relation among n+1 vectors in K^n, normalized as described on `zero_sum`.
template <class Scalar>
struct LinearRelation {
  Vector<Scalar> coefficients;
  /// False: coefficients sum to 1. True: the sum vanishes and the first coefficient is 1.
  bool zero_sum = false;
};

/// The projectively unique relation among the columns of an n x (n+1) matrix.
template <class Derived>
LinearRelation<typename Derived::Scalar> unique_relation(const Eigen::MatrixBase<Derived>& vectors) {
  using Scalar = typename Derived::Scalar;
  const Index n = vectors.rows();
  if (vectors.cols() != n + 1)
    throw std::invalid_argument("unique_relation: expected n+1 vectors in K^n");
  Vector<Scalar> alpha(n + 1);
  Matrix<Scalar> minor(n, n);
  for (Index i = 0; i <= n; ++i) {
    for (Index j = 0, c = 0; j <= n; ++j)
      if (j != i) minor.col(c++) = vectors.col(j);
    const Scalar d = determinant(minor);
    if (is_zero(d)) throw GenericityError("unique_relation: tuple is not linearly generic");
    alpha(i) = (i % 2 == 0) ? d : Scalar(-d);
  }
  Scalar total(0);
  for (Index i = 0; i <= n; ++i) total = total + alpha(i);
  LinearRelation<Scalar> out;
  out.zero_sum = is_zero(total);
  const Scalar scale = out.zero_sum ? alpha(0) : total;
  out.coefficients = alpha;
  for (Index i = 0; i <= n; ++i) out.coefficients(i) = alpha(i) / scale;
  return out;
}

/// Every subsequence of the columns of length <= rows is linearly independent.
template <class Derived>
bool is_linearly_generic(const Eigen::MatrixBase<Derived>& vectors) {
  using Scalar = typename Derived::Scalar;
  const Index n = vectors.rows();
  const Index k = vectors.cols();
  if (k <= n) return rank(vectors) == k;
  std::vector<Index> pick(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) pick[static_cast<std::size_t>(i)] = i;
  Matrix<Scalar> sub(n, n);
  while (true) {
    for (Index i = 0; i < n; ++i) sub.col(i) = vectors.col(pick[static_cast<std::size_t>(i)]);
    if (is_zero(determinant(sub))) return false;
    Index i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == k - n + i) --i;
    if (i < 0) return true;
    ++pick[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < n; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Exact inverse by Gauss-Jordan; throws on a singular matrix.
template <class Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const Index n = m.rows();
  Matrix<Scalar> a = m;
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
  for (Index c = 0; c < n; ++c) {
    Index pivot = c;
    while (pivot < n && is_zero(a(pivot, c))) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: matrix is singular");
    a.row(pivot).swap(a.row(c));
    inv.row(pivot).swap(inv.row(c));
    const Scalar lead = a(c, c);
    for (Index j = 0; j < n; ++j) {
      a(c, j) = a(c, j) / lead;
      inv(c, j) = inv(c, j) / lead;
    }
    for (Index i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      const Scalar factor = a(i, c);
      for (Index j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - factor * a(c, j);
        inv(i, j) = inv(i, j) - factor * inv(c, j);
      }
    }
  }
  return inv;
}

/// Exact matrix product; avoids Eigen's blocked kernels for heavy scalar types.
template <class DerivedA, class DerivedB>
Matrix<typename DerivedA::Scalar> multiply(const Eigen::MatrixBase<DerivedA>& a,
                                           const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  Matrix<Scalar> out(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      Scalar acc(0);
      for (Index k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

template <class DerivedA, class DerivedB>
bool equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// Parses "p", "p/q" or a decimal such as "-1.25" or "3e-2" exactly.
Rational parse_rational(std::string_view text);
/// Renders "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

}  // namespace tautclass
