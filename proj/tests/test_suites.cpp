#include <doctest.h>

#include "tautclass/suites.hpp"

using namespace tautclass;

namespace {

ClassSummary find(const std::vector<ClassSummary>& all, const std::string& name) {
  for (const auto& s : all)
    if (s.name == name) return s;
  FAIL("missing summary " << name);
  return {};
}

}  // namespace

TEST_CASE("random suites pass") {
  for (const std::string name : {"witt-relations", "witt-cocycle", "euler-boundary", "alternation"})
    for (int n : {2, 4})
      for (std::uint64_t seed : {1u, 2u}) {
        CAPTURE(name);
        CAPTURE(n);
        SuiteOptions o;
        o.n = n;
        o.seed = seed;
        o.samples = 40;
        const SuiteReport r = run_suite(name, o);
        CHECK(r.failures.empty());
        CHECK(r.samples == (name == "witt-cocycle" ? 48 : 40));
      }
  SuiteOptions odd;
  odd.n = 3;
  CHECK(run_suite("euler-boundary", odd).failures.empty());
  CHECK(run_suite("alternation", odd).failures.empty());
  SuiteOptions quad;
  quad.radicand = 2;
  quad.samples = 20;
  CHECK(run_suite("euler-boundary", quad).failures.empty());
  CHECK(run_suite("alternation", quad).failures.empty());
  CHECK_THROWS_AS(run_suite("witt-relations", quad), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("nonsense", SuiteOptions{}), std::invalid_argument);
  SuiteOptions zero;
  zero.n = 0;
  CHECK_THROWS_AS(run_suite("euler-boundary", zero), std::invalid_argument);
}

TEST_CASE("default sample counts") {
  CHECK(run_suite("witt-relations", SuiteOptions{}).samples == 200);
  CHECK(run_suite("witt-cocycle", SuiteOptions{}).samples == 120);
}

TEST_CASE("suites are deterministic in the seed") {
  SuiteOptions o;
  o.samples = 10;
  o.seed = 99;
  const SuiteReport a = run_suite("witt-cocycle", o), b = run_suite("witt-cocycle", o);
  CHECK(a.failures == b.failures);
  CHECK(a.samples == b.samples);
}

TEST_CASE("built-in summaries") {
  const std::vector<ClassSummary> all = builtin_summaries(3, false);
  CHECK(all.size() == 13);
  for (const ClassSummary& s : all) {
    CAPTURE(s.name);
    CHECK(smillie_failures(s).empty());
    CHECK(linear_relation_failures(s).empty());
    CHECK(comparison_failures(s).empty());
    CHECK(triangulation_failures(s).empty());
  }
  const ClassSummary dt = find(all, "doubled-torus");
  CHECK(dt.eu0 == 1);
  CHECK(dt.components == std::vector<std::int64_t>{1, -3});
  CHECK(dt.euler == 4);
  REQUIRE(dt.witt);
  REQUIRE(dt.bar_witt);
  CHECK(signature(*dt.witt) == 4);
  CHECK(signature(*dt.bar_witt) == 4);
  CHECK(dt.simplices == 6);
  const ClassSummary sqrt2 = find(all, "swap-sqrt2");
  CHECK(sqrt2.eu0 == 0);
  CHECK(!sqrt2.witt);
}

TEST_CASE("checks catch wrong values") {
  ClassSummary s = summarize_surface(doubled_torus(), StructureTag::sl, 1);
  REQUIRE(smillie_failures(s).empty());
  ClassSummary bad = s;
  bad.components[1] = -2;
  CHECK(smillie_failures(bad).size() == 1);
  CHECK(!linear_relation_failures(bad).empty());
  bad = s;
  bad.euler = 3;
  CHECK(comparison_failures(bad).size() == 1);
  bad = s;
  bad.witt = WittElement::symbol(1);
  CHECK(comparison_failures(bad).size() == 1);
  bad = s;
  bad.simplices = 3;
  CHECK(triangulation_failures(bad).size() == 1);
  bad = s;
  bad.plus->coefficients(0) = 2;
  CHECK(!linear_relation_failures(bad).empty());
}

TEST_CASE("product summary") {
  const ClassSummary p = summarize_product(doubled_torus(), reversed(doubled_torus()), 3);
  CHECK(p.n == 4);
  CHECK(p.eu0 == -1);
  CHECK(p.components == std::vector<std::int64_t>{-1, 5, -10});
  CHECK(p.euler == -16);
  CHECK(p.simplices == 216);
  CHECK(smillie_failures(p).empty());
  CHECK(comparison_failures(p).empty());
}

TEST_CASE("sampler helpers") {
  Sampler s(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix<Rational> m = s.sl2_integer(9);
    CHECK(determinant(m) == 1);
    CHECK(m.cwiseAbs().maxCoeff() <= 9);
    Vector<Rational> u(2);
    u << s.integer(-3, 3), s.nonzero_integer(3);
    const Matrix<Rational> g = line_stabilizer(u, s);
    CHECK(determinant(g) == 1);
    const Vector<Rational> gu = multiply(g, u);
    CHECK(is_zero(gu(0) * u(1) - gu(1) * u(0)));
    CHECK(is_linearly_generic(s.generic_tuple<Rational>(3, 5, 9, 0)));
  }
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
}
