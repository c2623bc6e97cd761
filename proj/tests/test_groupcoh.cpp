#include <doctest.h>

#include "generators.hpp"
#include "tautclass/families.hpp"
#include "tautclass/flatbundles.hpp"
#include "tautclass/groupcoh.hpp"

using namespace tautclass;

namespace {

Vector<Rational> vec2(Rational a, Rational b) {
  Vector<Rational> v(2);
  v << a, b;
  return v;
}

// g with g u on the line of u: conjugate of an upper triangular matrix by a basis change sending e1 to u.
Matrix<Rational> stabilizer_of_line(const Vector<Rational>& u, testgen::Generator& gen) {
  Matrix<Rational> p(2, 2);
  p.col(0) = u;
  p.col(1) = is_zero(u(0)) ? vec2(1, 0) : vec2(0, 1);
  const Rational a = gen.nonzero_rational(5);
  const Matrix<Rational> t = matrix2(a, gen.rational(5), 0, 1 / a);
  return multiply(multiply(p, t), inverse(p));
}

const WittCocycle cocycle = [](const BarTriple& g, const Vector<Rational>& u) { return witt_cocycle(g, u); };

}  // namespace

TEST_CASE("witt cocycle examples") {
  const Matrix<Rational> one = Matrix<Rational>::Identity(2, 2);
  const Vector<Rational> e1 = vec2(1, 0);
  CHECK(witt_cocycle({one, matrix2(0, -1, 1, 0), matrix2(1, -1, 1, 0)}, e1) == WittElement::symbol(1));
  CHECK(witt_cocycle({one, one, matrix2(0, -1, 1, 0)}, e1).empty());
  CHECK_THROWS_AS(witt_cocycle({one, one, one}, vec2(0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(witt_cocycle({one, one, matrix2(2, 0, 0, 1)}, e1), std::invalid_argument);

  testgen::Generator gen(61);
  for (int trial = 0; trial < 50; ++trial) {
    BarTriple g{gen.sl2_rational(9), gen.sl2_rational(9), gen.sl2_rational(9)};
    const Vector<Rational> u = vec2(gen.integer(-5, 5), gen.nonzero_integer(5));
    const WittElement w = witt_cocycle(g, u);
    for (std::size_t i = 0; i < 3; ++i) {
      BarTriple flipped = g;
      flipped[i] = -flipped[i];
      CHECK(witt_cocycle(flipped, u) == w);
    }
    // Left invariance.
    const Matrix<Rational> k = gen.sl2_rational(9);
    CHECK(witt_cocycle({multiply(k, g[0]), multiply(k, g[1]), multiply(k, g[2])}, u) == w);
  }
}

TEST_CASE("cocycle identity") {
  testgen::Generator gen(62);
  const Matrix<Rational> one = Matrix<Rational>::Identity(2, 2);
  CHECK(cocycle_identity_residual({one, one, one, one}, vec2(1, 0)).empty());
  for (int trial = 0; trial < 100; ++trial) {
    std::array<Matrix<Rational>, 4> g{gen.sl2_integer(9), gen.sl2_integer(9), gen.sl2_integer(9), gen.sl2_integer(9)};
    CHECK(witt_is_zero(cocycle_identity_residual(g, vec2(1, 0))));
  }
  // Exactly one projective coincidence: [g0 u] = [g1 u].
  for (int trial = 0; trial < 20; ++trial) {
    const Vector<Rational> u = vec2(gen.integer(-3, 3), gen.nonzero_integer(3));
    std::array<Matrix<Rational>, 4> g{gen.sl2_integer(9), Matrix<Rational>(), gen.sl2_integer(9), gen.sl2_integer(9)};
    g[1] = multiply(g[0], stabilizer_of_line(u, gen));
    Matrix<Rational> points(2, 4);
    for (Index i = 0; i < 4; ++i) points.col(i) = multiply(g[static_cast<std::size_t>(i)], u);
    int coincident = 0;
    for (Index i = 0; i < 4; ++i)
      for (Index j = i + 1; j < 4; ++j)
        coincident += is_zero(points(0, i) * points(1, j) - points(1, i) * points(0, j));
    if (coincident != 1) continue;
    CHECK(witt_is_zero(cocycle_identity_residual(g, u)));
  }
}

TEST_CASE("commuting pair cycles") {
  const Matrix<Rational> g = matrix2(2, 0, 0, Rational(1, 2)), h = matrix2(3, 0, 0, Rational(1, 3));
  const BarChain2 z = commuting_pair_cycle(g, h);
  CHECK(bar_boundary(z).empty());
  CHECK(z.terms.size() == 2);
  CHECK(witt_cocycle(z.terms[0].first, vec2(1, 1)) == WittElement::symbol(210));
  CHECK(witt_cocycle(z.terms[1].first, vec2(1, 1)) == WittElement::symbol(210));
  CHECK(evaluate_bar(cocycle, z, vec2(1, 1)).empty());
  CHECK_THROWS_AS(commuting_pair_cycle(matrix2(1, 1, 0, 1), matrix2(1, 0, 1, 1)), std::invalid_argument);
  // Another lift of h gives the same class.
  const BarChain2 lifted = commuting_pair_cycle(g, Matrix<Rational>(-h));
  CHECK(bar_boundary(lifted).empty());
  CHECK(evaluate_bar(cocycle, lifted, vec2(1, 1)).empty());
  // Polynomials in a matrix with irrational eigenvalues.
  const Matrix<Rational> m = matrix2(2, 1, 1, 1);
  const BarChain2 w = commuting_pair_cycle(m, multiply(m, m));
  CHECK(bar_boundary(w).empty());
  CHECK_NOTHROW(evaluate_bar(cocycle, w, vec2(1, 0)));
}

TEST_CASE("surface cycles") {
  const BarChain2 torus = surface_cycle_from_rep(1, torus_diagonal().generators);
  CHECK(torus.terms.size() == 2);
  CHECK(bar_boundary(torus).empty());
  for (const auto& rep : genus2_family()) {
    CAPTURE(rep.name);
    const BarChain2 z = surface_cycle_from_rep(2, rep.generators);
    CHECK(z.terms.size() == 6);
    CHECK(bar_boundary(z).empty());
  }
  CHECK_THROWS_AS(surface_cycle_from_rep(1, {matrix2(1, 1, 0, 1), matrix2(1, 0, 1, 1)}), RepresentationError);
}

TEST_CASE("bar evaluation") {
  const BarChain2 z = surface_cycle_from_rep(2, doubled_torus().generators);
  CHECK(evaluate_bar(cocycle, BarChain2{}, vec2(1, 0)).empty());
  BarChain2 doubled = z;
  for (const auto& [g, c] : z.terms) doubled.add(g, -c);
  CHECK(evaluate_bar(cocycle, doubled, vec2(1, 0)).empty());

  testgen::Generator gen(63);
  for (const auto& rep : genus2_family()) {
    CAPTURE(rep.name);
    const BarChain2 cycle = surface_cycle_from_rep(2, rep.generators);
    const WittElement reference = evaluate_bar(cocycle, cycle, vec2(1, 0));
    CHECK(witt_equal(evaluate_bar(cocycle, cycle, vec2(1, 1)), reference));
    for (int trial = 0; trial < 5; ++trial) {
      const Vector<Rational> u = vec2(gen.integer(-9, 9), gen.nonzero_integer(9));
      CHECK(witt_equal(evaluate_bar(cocycle, cycle, u), reference));
    }
    // Signature against the Euler class of the bundle.
    const SurfaceBundle<Rational> b = bundle_from_surface_rep(2, rep.generators, StructureTag::sl);
    const Section<Rational> s = random_generic_section(b.bundle, 5);
    const auto eu0 = std::get<std::int64_t>(evaluate_class(b.bundle, s, ClassSelector::eu_k(0), b.surface.fundamental).value);
    CHECK(signature(reference) == 4 * eu0);
    // Negated lifts change nothing.
    BarChain2 negated = cycle;
    for (auto& [g, c] : negated.terms) g[1] = -g[1];
    CHECK(evaluate_bar(cocycle, negated, vec2(1, 0)) == reference);
  }
}
