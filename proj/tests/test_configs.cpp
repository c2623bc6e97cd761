#include <doctest.h>

#include "generators.hpp"
#include "tautclass/configs.hpp"

using namespace tautclass;

namespace {

Matrix<Rational> standard_tuple(int n) {
  Matrix<Rational> m = Matrix<Rational>::Zero(n, n + 1);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 1;
    m(i, n) = 1;
  }
  return m;
}

// Rule order reversed relative to uplus_canonicalize: fold the index first, then the sign.
UPlusSymbol canonicalize_fold_first(const RawPlusSymbol& raw) {
  const int n = raw.dimension();
  UPlusSymbol out = UPlusSymbol::zero(n);
  int a = raw.plus_count();
  std::int64_t c = 1;
  if (a > n / 2) {
    if (n % 2 == 1 && 2 * a == n + 1) return out;
    a = n + 1 - a;
    c = -c;
  }
  if (raw.leading < 0) c = -c;
  out.coefficients(a) = c;
  return out;
}

// Normalization: g in SL(2,Q) with g u = e1, g v ~ e2; read lambda from g w.
Rational normalized_lambda(const Matrix<Rational>& p) {
  Matrix<Rational> m(2, 2);
  m.col(0) = p.col(0);
  m.col(1) = p.col(1);
  const Rational d = determinant(m);
  Matrix<Rational> scale = Matrix<Rational>::Identity(2, 2);
  scale(1, 1) = d;
  const Matrix<Rational> g = multiply(scale, inverse(m));
  REQUIRE(determinant(g) == 1);
  const Matrix<Rational> w = multiply(g, p.col(2));
  return w(1, 0) / w(0, 0);
}

}  // namespace

TEST_CASE("u_symbol on the two standard tuples") {
  for (int n : {2, 4, 6}) {
    Matrix<Rational> plus = standard_tuple(n);
    CHECK(u_symbol(plus).coefficient == 1);
    Matrix<Rational> minus = plus;
    minus(n - 1, n - 1) = -1;
    minus(n - 1, n) = -1;
    CHECK(u_symbol(minus).coefficient == -1);
  }
  Matrix<Rational> p(2, 3);
  p << 1, 0, 1, 0, 1, -1;
  CHECK(u_symbol(p).coefficient == -1);
  CHECK(to_string(u_symbol(p)) == "-[+]");
  CHECK_THROWS_AS(u_symbol(standard_tuple(3)), std::invalid_argument);
  Matrix<Rational> degenerate(2, 3);
  degenerate << 1, 0, 1, 0, 1, 0;
  CHECK_THROWS_AS(u_symbol(degenerate), GenericityError);
}

TEST_CASE("raw plus symbols") {
  Matrix<Rational> p(2, 3);
  p << 1, 0, 1, 0, 1, 1;
  CHECK(to_string(uplus_raw_symbol(p)) == "[+;++]");
  p << 1, 0, 1, 0, -1, -1;
  CHECK(to_string(uplus_raw_symbol(p)) == "[-;++]");

  testgen::Generator gen(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix<Rational> t = gen.generic_tuple(3, 4, 9);
    Matrix<Rational> scaled = t;
    for (Index j = 0; j < 4; ++j) scaled.col(j) *= gen.positive_rational(20);
    const RawPlusSymbol a = uplus_raw_symbol(t), b = uplus_raw_symbol(scaled);
    CHECK(a.leading == b.leading);
    CHECK(a.tail == b.tail);
  }
}

TEST_CASE("canonicalization examples and confluence") {
  const UPlusSymbol s1 = uplus_canonicalize(RawPlusSymbol{1, {1, 1}});
  CHECK(s1.coefficients(0) == 0);
  CHECK(s1.coefficients(1) == -1);
  const UPlusSymbol s2 = uplus_canonicalize(RawPlusSymbol{-1, {-1, -1}});
  CHECK(s2.coefficients(0) == -1);
  CHECK(s2.coefficients(1) == 0);
  const UPlusSymbol s3 = uplus_canonicalize(RawPlusSymbol{1, {1, 1, -1}});
  CHECK(s3 == UPlusSymbol::zero(3));
  CHECK(to_string(s1) == "-1*1+");

  for (int n = 1; n <= 6; ++n)
    for (int mask = 0; mask < (1 << (n + 1)); ++mask) {
      RawPlusSymbol raw{(mask & 1) ? 1 : -1, {}};
      for (int i = 1; i <= n; ++i) raw.tail.push_back((mask >> i) & 1 ? 1 : -1);
      CHECK(uplus_canonicalize(raw) == canonicalize_fold_first(raw));
      // The map to U recovers sgn(det * prod alpha) for even n.
      if (n % 2 == 0) {
        int u = raw.leading;
        for (int t : raw.tail) u *= t;
        CHECK(to_u(uplus_canonicalize(raw)) == u);
      }
    }
}

TEST_CASE("homological core check") {
  UPlusSymbol c = UPlusSymbol::zero(2);
  c.coefficients << 1, -3;
  CHECK(homological_core_check(c));
  c.coefficients << 1, 0;
  CHECK_FALSE(homological_core_check(c));
  CHECK(homological_core_check(UPlusSymbol::zero(4)));
}

TEST_CASE("witt triple symbol") {
  Matrix<Rational> p(2, 3);
  p << 1, 0, 1, 0, 1, 5;
  CHECK(witt_triple_symbol(p) == WittElement::symbol(5));
  p << 1, 0, 1, 0, 1, -1;
  CHECK(witt_triple_symbol(p) == WittElement::symbol(-1));
  p << 1, 2, 1, 0, 0, 5;
  CHECK_THROWS_AS(witt_triple_symbol(p), GenericityError);

  testgen::Generator gen(32);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix<Rational> t = gen.generic_tuple(2, 3, 9);
    CHECK(witt_triple_symbol(t) == WittElement::symbol(normalized_lambda(t)));
    const Matrix<Rational> g = gen.sl2_rational(9);
    CHECK(witt_triple_symbol(multiply(g, t)) == witt_triple_symbol(t));
    Matrix<Rational> scaled = t;
    for (Index j = 0; j < 3; ++j) scaled.col(j) *= gen.nonzero_rational(9);
    CHECK(witt_triple_symbol(scaled) == witt_triple_symbol(t));
  }
}

TEST_CASE("boundary symbol sums vanish") {
  Matrix<Rational> four(2, 4);
  four << 1, 0, 1, 1, 0, 1, 2, 5;
  CHECK(witt_is_zero(std::get<WittElement>(boundary_symbol_sum(four, SymbolMode::witt))));

  testgen::Generator gen(33);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix<Rational> w = gen.generic_tuple(2, 4, 20);
    CHECK(witt_is_zero(std::get<WittElement>(boundary_symbol_sum(w, SymbolMode::witt))));
    for (int n : {2, 3, 4}) {
      const Matrix<Rational> t = gen.generic_tuple(n, n + 2, 9);
      if (n % 2 == 0) CHECK(std::get<std::int64_t>(boundary_symbol_sum(t, SymbolMode::projective)) == 0);
      CHECK(std::get<UPlusSymbol>(boundary_symbol_sum(t, SymbolMode::positive)) ==
            UPlusSymbol::zero(n));
    }
  }
}

TEST_CASE("alternation under adjacent swaps") {
  testgen::Generator gen(34);
  for (int n : {2, 4}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix<Rational> t = gen.generic_tuple(n, n + 1, 9);
      const Index i = gen.integer(0, n - 1);
      Matrix<Rational> swapped = t;
      swapped.col(i).swap(swapped.col(i + 1));
      CHECK(u_symbol(swapped).coefficient == -u_symbol(t).coefficient);
      CHECK(uplus_canonicalize(uplus_raw_symbol(swapped)) ==
            -uplus_canonicalize(uplus_raw_symbol(t)));
    }
  }
}

TEST_CASE("equivariance under GL with negative determinant") {
  testgen::Generator gen(35);
  for (int n : {2, 4}) {
    for (int trial = 0; trial < 50; ++trial) {
      const Matrix<Rational> t = gen.generic_tuple(n, n + 1, 9);
      Matrix<Rational> g;
      do g = gen.integer_matrix(n, n, 5);
      while (sign(determinant(g)) >= 0);
      const Matrix<Rational> moved = multiply(g, t);
      CHECK(u_symbol(moved).coefficient == -u_symbol(t).coefficient);
      const RawPlusSymbol a = uplus_raw_symbol(t), b = uplus_raw_symbol(moved);
      CHECK(b.leading == -a.leading);
      CHECK(b.tail == a.tail);
    }
  }
}

TEST_CASE("canonical lifts") {
  Vector<Rational> v(3);
  v << 0, -4, 2;
  const Vector<Rational> p = projective_lift(v), q = positive_lift(v);
  CHECK(p(1) == 1);
  CHECK(p(2) == Rational(-1, 2));
  CHECK(q(1) == -1);
  CHECK(q(2) == Rational(1, 2));
}

TEST_CASE("symbols over doubles match exact symbols") {
  testgen::Generator gen(36);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix<Rational> t = gen.generic_tuple(4, 5, 9);
    Matrix<double> d(4, 5);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 5; ++j) d(i, j) = t(i, j).convert_to<double>();
    CHECK(u_symbol(d).coefficient == u_symbol(t).coefficient);
  }
}
