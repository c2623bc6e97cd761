#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tautclass/exactmath.hpp"
#include "tautclass/witt.hpp"

namespace tautclass {

/// Element k*[+] of U = Z (n even).
struct USymbol {
  int dimension = 0;
  std::int64_t coefficient = 0;
};

/// The symbol [s; s_1 ... s_n] of a generic tuple in positive projective space.
struct RawPlusSymbol {
  int leading = 1;
  std::vector<int> tail;

  int dimension() const { return static_cast<int>(tail.size()); }
  int plus_count() const;
};

/// Element of U_+ = Z^(floor(n/2)+1) in the basis 0+, 1+, ..., floor(n/2)+.
struct UPlusSymbol {
  int dimension = 0;
  IntVector coefficients;

  static UPlusSymbol zero(int n);

  UPlusSymbol& operator+=(const UPlusSymbol& other);
  UPlusSymbol& operator-=(const UPlusSymbol& other);
  friend UPlusSymbol operator+(UPlusSymbol a, const UPlusSymbol& b) { return a += b; }
  friend UPlusSymbol operator-(UPlusSymbol a, const UPlusSymbol& b) { return a -= b; }
  friend UPlusSymbol operator-(const UPlusSymbol& a) { return std::int64_t{-1} * a; }
  friend UPlusSymbol operator*(std::int64_t m, const UPlusSymbol& a);
  friend bool operator==(const UPlusSymbol& a, const UPlusSymbol& b);
};

/// Value of a characteristic class on a cycle: U (or a single component), U_+, or W(Q).
using ClassValue = std::variant<std::int64_t, UPlusSymbol, WittElement>;

std::string to_string(const USymbol& s);
std::string to_string(const RawPlusSymbol& s);
std::string to_string(const UPlusSymbol& s);
std::string to_string(const ClassValue& v);

/// Signs of D = det(v_1..v_n) and of the coefficients in v_{n+1} = sum alpha_i v_i.
struct ExpansionSigns {
  int determinant = 0;
  std::vector<int> coefficients;
};

/// Columns of `points` are lifts v_1..v_{n+1} in K^n; throws GenericityError unless generic.
template <class Derived>
ExpansionSigns expansion_signs(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Index n = points.rows();
  if (points.cols() != n + 1) throw std::invalid_argument("expected n+1 points in K^n");
  Matrix<Scalar> basis = points.leftCols(n);
  ExpansionSigns out;
  out.determinant = sign(determinant(basis));
  if (out.determinant == 0) throw GenericityError("first n lifts are dependent");
  for (Index i = 0; i < n; ++i) {
    Matrix<Scalar> replaced = basis;
    replaced.col(i) = points.col(n);
    const int s = sign(determinant(replaced));
    if (s == 0) throw GenericityError("tuple is not generic");
    out.coefficients.push_back(s * out.determinant);
  }
  return out;
}

/// sgn(det(v_1..v_n) * alpha_1 ... alpha_n) as a multiple of [+].
template <class Derived>
USymbol u_symbol(const Eigen::MatrixBase<Derived>& points) {
  const int n = static_cast<int>(points.rows());
  if (n % 2 == 1) throw std::invalid_argument("u_symbol: U vanishes for odd n");
  const ExpansionSigns e = expansion_signs(points);
  std::int64_t s = e.determinant;
  for (int c : e.coefficients) s *= c;
  return USymbol{n, s};
}

template <class Derived>
RawPlusSymbol uplus_raw_symbol(const Eigen::MatrixBase<Derived>& points) {
  const ExpansionSigns e = expansion_signs(points);
  return RawPlusSymbol{e.determinant, e.coefficients};
}

/// Writes a^s in the basis 0+ .. floor(n/2)+: first a^- = -a^+, then a^+ = -(n+1-a)^+.
UPlusSymbol uplus_canonicalize(const RawPlusSymbol& raw);

/// The homomorphism U_+ -> U sending a+ to (-1)^a [+]; zero for odd n.
std::int64_t to_u(const UPlusSymbol& c);

/// sum_a c_a (n - 2a + 1) = 0.
bool homological_core_check(const UPlusSymbol& c);

/// <det(u,v) det(v,w) det(w,u)> for the columns u, v, w of a 2x3 rational matrix.
WittElement witt_triple_symbol(const Matrix<Rational>& points);

enum class SymbolMode { projective, positive, witt };

/// sum_j (-1)^(j-1) symbol(tuple without point j) for n+2 points in K^n.
template <class Derived>
ClassValue boundary_symbol_sum(const Eigen::MatrixBase<Derived>& points, SymbolMode mode) {
  using Scalar = typename Derived::Scalar;
  const Index n = points.rows();
  if (points.cols() != n + 2) throw std::invalid_argument("expected n+2 points in K^n");
  auto omit = [&](Index j) {
    Matrix<Scalar> out(n, n + 1);
    for (Index c = 0, k = 0; c < n + 2; ++c)
      if (c != j) out.col(k++) = points.col(c);
    return out;
  };
  switch (mode) {
    case SymbolMode::projective: {
      std::int64_t total = 0;
      for (Index j = 0; j < n + 2; ++j)
        total += (j % 2 == 0 ? 1 : -1) * u_symbol(omit(j)).coefficient;
      return total;
    }
    case SymbolMode::positive: {
      UPlusSymbol total = UPlusSymbol::zero(static_cast<int>(n));
      for (Index j = 0; j < n + 2; ++j) {
        const UPlusSymbol term = uplus_canonicalize(uplus_raw_symbol(omit(j)));
        if (j % 2 == 0) total += term;
        else total -= term;
      }
      return total;
    }
    case SymbolMode::witt: {
      if constexpr (std::is_same_v<Scalar, Rational>) {
        if (n != 2) throw std::invalid_argument("Witt symbols need n = 2");
        WittElement total;
        for (Index j = 0; j < n + 2; ++j) {
          const WittElement term = witt_triple_symbol(omit(j));
          if (j % 2 == 0) total += term;
          else total -= term;
        }
        return total;
      } else {
        throw std::invalid_argument("Witt symbols need K = Q");
      }
    }
  }
  throw std::invalid_argument("unknown symbol mode");
}

/// Scales v so its first nonzero coordinate is 1.
template <class Derived>
Vector<typename Derived::Scalar> projective_lift(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) {
      const Scalar lead = v(i);
      Vector<Scalar> out = v;
      for (Index k = 0; k < v.size(); ++k) out(k) = out(k) / lead;
      return out;
    }
  throw std::domain_error("projective_lift: zero vector");
}

/// Scales v by a positive scalar so its first nonzero coordinate is +1 or -1.
template <class Derived>
Vector<typename Derived::Scalar> positive_lift(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) {
      const Scalar lead = sign(v(i)) < 0 ? Scalar(-v(i)) : Scalar(v(i));
      Vector<Scalar> out = v;
      for (Index k = 0; k < v.size(); ++k) out(k) = out(k) / lead;
      return out;
    }
  throw std::domain_error("positive_lift: zero vector");
}

}  // namespace tautclass
