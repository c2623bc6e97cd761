#include <doctest.h>

#include <cmath>
#include <set>

#include "generators.hpp"
#include "tautclass/witt.hpp"

using namespace tautclass;

namespace {

// Local solvability of z^2 = a x^2 + b y^2 by exhaustive search for a primitive solution
// modulo p^k (a, b squarefree integers).
bool locally_solvable(std::int64_t a, std::int64_t b, std::int64_t p, int k) {
  std::int64_t modulus = 1;
  for (int i = 0; i < k; ++i) modulus *= p;
  std::set<std::int64_t> squares;
  for (std::int64_t z = 0; z < modulus; ++z) squares.insert(z * z % modulus);
  auto mod = [modulus](std::int64_t v) { return ((v % modulus) + modulus) % modulus; };
  for (std::int64_t x = 0; x < modulus; ++x)
    for (std::int64_t y = 0; y < modulus; ++y) {
      if (x % p == 0 && y % p == 0) continue;  // z would have to be a unit with z^2 = 0 mod p
      if (squares.count(mod(mod(a * x % modulus * x) + mod(b * y % modulus * y)))) return true;
    }
  return false;
}

bool is_squarefree(std::int64_t n) {
  n = std::abs(n);
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return n != 0;
}

// Nontrivial small integer solution of a x^2 + b y^2 = c z^2.
bool ternary_isotropic(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t bound) {
  for (std::int64_t x = 0; x <= bound; ++x)
    for (std::int64_t y = 0; y <= bound; ++y)
      for (std::int64_t z = 0; z <= bound; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (a * x * x + b * y * y == c * z * z) return true;
      }
  return false;
}

WittElement sym(std::int64_t n) { return WittElement::symbol(Rational(n)); }
WittElement sym(const Rational& q) { return WittElement::symbol(q); }

}  // namespace

TEST_CASE("square_class examples") {
  CHECK(square_class(Rational(70, 3)) == 210);
  CHECK(square_class(Rational(8)) == 2);
  CHECK(square_class(Rational(-4, 9)) == -1);
  CHECK(square_class(Rational(1, 12)) == 3);
  CHECK_THROWS_AS(square_class(Rational(0)), std::domain_error);
}

TEST_CASE("factorization") {
  const Factorization f = factorize(Integer(-360));
  CHECK(f.sign == -1);
  REQUIRE(f.primes.size() == 3);
  CHECK(f.primes[0] == std::make_pair(Integer(2), 3));
  CHECK(f.primes[2] == std::make_pair(Integer(5), 1));
  // Large prime cofactor accepted through the primality test.
  const Integer big("1000000000000000003");  // prime
  CHECK(factorize(Integer(6) * big).primes.back().first == big);
  // Two primes above a tiny bound cannot be separated.
  CHECK_THROWS_AS(factorize(Integer(101 * 103), 10), FactorizationError);
  CHECK(factorize(Integer(101 * 103), 200).primes.size() == 2);
}

TEST_CASE("hilbert symbol examples") {
  CHECK(hilbert_symbol(-1, -1, Place::infinite()) == -1);
  CHECK(hilbert_symbol(-1, -1, Place::prime(Integer(2))) == -1);
  CHECK_FALSE(locally_solvable(-1, -1, 2, 3));
  CHECK(hilbert_symbol(2, 5, Place::prime(Integer(5))) == -1);
  CHECK_FALSE(locally_solvable(2, 5, 5, 2));
  CHECK(hilbert_symbol(Rational(3, 4), 7, Place::prime(Integer(7))) == hilbert_symbol(3, 7, Place::prime(Integer(7))));
  CHECK_THROWS_AS(Place::prime(Integer(9)), std::invalid_argument);
}

TEST_CASE("hilbert symbol agrees with local solvability search") {
  testgen::Generator gen(21);
  const std::pair<std::int64_t, int> places[] = {{2, 6}, {3, 4}, {5, 3}, {7, 3}};
  for (int trial = 0; trial < 60; ++trial) {
    std::int64_t a = 0, b = 0;
    while (!is_squarefree(a)) a = gen.nonzero_integer(40);
    while (!is_squarefree(b)) b = gen.nonzero_integer(40);
    for (const auto& [p, k] : places) {
      const int expected = locally_solvable(a, b, p, k) ? 1 : -1;
      CHECK_MESSAGE(hilbert_symbol(a, b, Place::prime(Integer(p))) == expected,
                    "a=" << a << " b=" << b << " p=" << p);
    }
  }
}

TEST_CASE("hilbert symbol product formula and bilinearity") {
  testgen::Generator gen(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = gen.nonzero_rational(60), b = gen.nonzero_rational(60);
    std::set<Integer> primes{Integer(2)};
    for (const Rational& q : {a, b})
      for (const auto& [p, e] : factorize(boost::multiprecision::numerator(q) *
                                          boost::multiprecision::denominator(q))
                                    .primes)
        primes.insert(p);
    int product = hilbert_symbol(a, b, Place::infinite());
    for (const Integer& p : primes) product *= hilbert_symbol(a, b, Place::prime(p));
    CHECK(product == 1);
  }
  const Place places[] = {Place::infinite(), Place::prime(Integer(2)), Place::prime(Integer(3)),
                          Place::prime(Integer(5)), Place::prime(Integer(13))};
  for (const Place& place : places) {
    for (int trial = 0; trial < 100; ++trial) {
      const Rational a = gen.nonzero_rational(50), b1 = gen.nonzero_rational(50),
                     b2 = gen.nonzero_rational(50);
      CHECK(hilbert_symbol(a, b1 * b2, place) ==
            hilbert_symbol(a, b1, place) * hilbert_symbol(a, b2, place));
      CHECK(hilbert_symbol(a, b1, place) == hilbert_symbol(b1, a, place));
    }
  }
}

TEST_CASE("witt group arithmetic") {
  const WittElement twice = sym(5) + sym(5);
  CHECK(twice.multiplicity(Integer(5)) == 2);
  CHECK((sym(5) + (-sym(5))).empty());
  const WittElement scaled = witt_scale(sym(2) + sym(3), -2);
  CHECK(scaled.multiplicity(Integer(2)) == -2);
  CHECK(scaled.multiplicity(Integer(3)) == -2);
  CHECK(sym(Rational(20, 9)) == sym(5));
  CHECK(to_string(sym(2) - sym(-3)) == "-1*<-3> + 1*<2>");
  CHECK(to_string(WittElement{}) == "0");
}

TEST_CASE("witt_is_zero examples") {
  CHECK(witt_is_zero(sym(7) + sym(-7)));
  CHECK(witt_is_zero(sym(1) + sym(2) - sym(3) - sym(6)));
  CHECK(witt_is_zero(sym(1) + sym(1) - sym(2) - sym(2)));
  CHECK(witt_is_zero(WittElement{}));
  CHECK_FALSE(witt_is_zero(sym(1)));
  CHECK_FALSE(witt_is_zero(sym(1) + sym(-2)));
  // Same dimension, signature and discriminant; 3 is not a sum of two squares.
  CHECK_FALSE(witt_is_zero(sym(3) + sym(3) - sym(1) - sym(1)));
  // Equals 8<1>, signature 8.
  CHECK_FALSE(witt_is_zero(4 * sym(1) - 4 * sym(-1)));
  // <-1> + <-1> - <1> - <1>: signature -4.
  CHECK_FALSE(witt_is_zero(2 * sym(-1) - 2 * sym(1)));
  // Torsion: <1> - <2> has signature 0 but is nonzero.
  CHECK_FALSE(witt_is_zero(sym(1) - sym(2)));
  CHECK(witt_is_zero(2 * (sym(1) - sym(2))));
}

TEST_CASE("witt_is_zero agrees with a ternary isotropy search in dimension four") {
  testgen::Generator gen(23);
  int zeros = 0, nonzeros = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::int64_t a = 0, b = 0, c = 0;
    while (!is_squarefree(a)) a = gen.nonzero_integer(12);
    while (!is_squarefree(b)) b = gen.nonzero_integer(12);
    while (!is_squarefree(c)) c = gen.nonzero_integer(12);
    const Integer d = square_class(Rational(a * b * c));
    const std::int64_t dd = d.convert_to<std::int64_t>();
    // <a,b> and <c,d> share the discriminant; they agree iff <a,b> represents c.
    const bool expected = ternary_isotropic(a, b, c, 40);
    const WittElement w = sym(a) + sym(b) - sym(c) - sym(dd);
    CHECK_MESSAGE(witt_is_zero(w) == expected, "a=" << a << " b=" << b << " c=" << c);
    (expected ? zeros : nonzeros)++;
  }
  CHECK(zeros > 5);
  CHECK(nonzeros > 5);
}

TEST_CASE("four-term relation and alternation") {
  testgen::Generator gen(24);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = gen.nonzero_rational(99), b = gen.nonzero_rational(99);
    if ((a + b).is_zero()) continue;
    CHECK(witt_is_zero(sym(a) + sym(b) - sym(a + b) - sym(a * b * (a + b))));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const Rational l = gen.nonzero_rational(99);
    CHECK(witt_is_zero(sym(-l) + sym(l)));
  }
}

TEST_CASE("signature is a homomorphism and detects nonzero") {
  CHECK(signature(sym(5)) == 1);
  CHECK(signature(sym(-3)) == -1);
  CHECK(signature(sym(1) + sym(2) - sym(-3)) == 3);
  testgen::Generator gen(25);
  for (int trial = 0; trial < 100; ++trial) {
    WittElement w1, w2;
    for (int i = 0; i < 3; ++i) {
      w1 += gen.integer(-2, 2) * sym(gen.nonzero_rational(30));
      w2 += gen.integer(-2, 2) * sym(gen.nonzero_rational(30));
    }
    CHECK(signature(w1 + w2) == signature(w1) + signature(w2));
    if (witt_is_zero(w1)) CHECK(signature(w1) == 0);
  }
}

TEST_CASE("witt invariants report") {
  const WittInvariants inv = witt_invariants(sym(3) + sym(3) - sym(1) - sym(1));
  CHECK(inv.dimension == 4);
  CHECK(inv.signature == 0);
  CHECK(inv.discriminant == 1);
  bool has_three = false;
  for (const auto& [p, h] : inv.hasse)
    if (p == 3) {
      has_three = true;
      CHECK(h == -1);
    }
  CHECK(has_three);
}
